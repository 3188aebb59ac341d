#include "corg/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace corg {

namespace {

const std::vector<std::string> kEventNames = {
    "Aurora", "Meridian", "Halcyon",  "Borealis", "Zenith",   "Cobalt",
    "Vesper", "Solstice", "Ironwood", "Larkspur", "Quicksilver", "Tempest",
};

const std::vector<std::string> kEventKinds = {
    "Championships", "Festival", "Summit", "Regatta", "Expo", "Games",
};

const std::vector<std::string> kDescriptorPool = {
    "winter series",  "summer series",   "junior division",
    "senior division", "qualifier stage", "exhibition stage",
    "masters circuit", "amateur circuit",
};

const std::vector<std::string> kCityPool = {
    "Bergen",   "Tallinn",  "Porto",    "Quito",   "Adelaide", "Nairobi",
    "Valletta", "Reykjavik", "Osaka",    "Lima",    "Zagreb",   "Havana",
    "Tbilisi",  "Cusco",    "Hobart",   "Derry",   "Malmo",    "Bilbao",
    "Riga",     "Salem",    "Kotor",    "Fremantle", "Galway",  "Tampere",
    "Leuven",   "Matera",   "Gdansk",   "Kobe",    "Windhoek", "Cuenca",
};

std::string pick(const std::vector<std::string>& pool, std::size_t index,
                 const char* fallback_prefix) {
  if (index < pool.size()) {
    return pool[index];
  }
  std::ostringstream oss;
  oss << fallback_prefix << " " << (index - pool.size() + 1);
  return oss.str();
}

std::string body_text(const std::string& entity,
                      const std::optional<std::string>& descriptor,
                      const std::string& answer) {
  std::ostringstream oss;
  oss << "The " << entity;
  if (descriptor) {
    oss << " (" << *descriptor << ")";
  }
  oss << " drew record attendance across several weeks of programme. "
      << "Organisers confirmed that the "
      << (descriptor ? *descriptor : std::string("overall")) << " events "
      << "were hosted by " << answer << ". Local officials in " << answer
      << " praised the preparations, and the closing report described the "
      << "venues as excellent.";
  return oss.str();
}

std::size_t scaled_count(double fraction, std::size_t base_count) {
  if (fraction <= 0.0) {
    return 0;
  }
  return static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(base_count) - 1e-9));
}

}  // namespace

void validate_spec(const SynthSpec& spec) {
  if (spec.descriptors_per_entity < 1) {
    throw ValidationError("descriptors_per_entity must be >= 1");
  }
  if (spec.conflicts_per_descriptor < 1) {
    throw ValidationError("conflicts_per_descriptor must be >= 1");
  }
  auto in_unit = [](double f) { return f >= 0.0 && f <= 1.0; };
  if (!in_unit(spec.ambiguous_fraction) || !in_unit(spec.none_fraction)) {
    throw ValidationError("fractions must lie in [0, 1]");
  }
}

std::vector<CorpusRecord> synth_corpus(const SynthSpec& spec) {
  validate_spec(spec);
  std::mt19937_64 rng(spec.seed);
  const std::size_t k = spec.descriptors_per_entity;
  const std::size_t m = spec.conflicts_per_descriptor;
  const std::size_t base_count = k * m;

  std::vector<CorpusRecord> records;
  records.reserve(spec.questions);
  for (std::size_t qi = 0; qi < spec.questions; ++qi) {
    CorpusRecord record;
    {
      std::ostringstream oss;
      oss << "q" << qi;
      record.id = oss.str();
    }

    const int year =
        1988 + static_cast<int>(rng() % 36);
    std::ostringstream entity_oss;
    entity_oss << year << " " << kEventNames[rng() % kEventNames.size()] << " "
               << kEventKinds[rng() % kEventKinds.size()];
    const std::string entity = entity_oss.str();

    record.question.text = entity + " host city?";
    record.question.entity = entity;

    // Descriptors and answers drawn without replacement.
    std::vector<std::string> descriptors(kDescriptorPool);
    std::shuffle(descriptors.begin(), descriptors.end(), rng);
    std::vector<std::string> cities(kCityPool);
    std::shuffle(cities.begin(), cities.end(), rng);

    std::vector<std::string> desc(k);
    for (std::size_t i = 0; i < k; ++i) {
      desc[i] = pick(descriptors, i, "series");
    }
    std::vector<std::vector<std::string>> answer(k,
                                                 std::vector<std::string>(m));
    std::size_t city_index = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        answer[i][j] = pick(cities, city_index++, "settlement");
      }
    }

    for (std::size_t i = 0; i < k; ++i) {
      SubQuestion sq;
      sq.descriptor = desc[i];
      sq.answers = answer[i];
      record.question.sub_questions.push_back(std::move(sq));
    }

    std::size_t next_id = 0;
    auto make_context = [&](const std::optional<std::string>& descriptor,
                            const std::string& ans,
                            std::optional<Relation> gold) {
      ParsedContext ctx;
      std::ostringstream oss;
      oss << "c" << next_id++;
      ctx.id = oss.str();
      ctx.surface = entity;
      ctx.descriptor = descriptor;
      ctx.answer = ans;
      ctx.title = descriptor ? entity + " (" + *descriptor + ")" : entity;
      ctx.body = body_text(entity, descriptor, ans);
      ctx.gold_relation = gold;
      return ctx;
    };

    // Intended relation of a described context at (i, j) to the first base.
    auto base_relation = [&](std::size_t i, std::size_t j) {
      if (i != 0) {
        return Relation::Distracting;
      }
      return j == 0 ? Relation::Duplicated : Relation::Counterfactual;
    };

    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const bool is_first = i == 0 && j == 0;
        record.contexts.push_back(make_context(
            desc[i], answer[i][j],
            is_first ? std::nullopt
                     : std::optional<Relation>(base_relation(i, j))));
      }
    }
    for (std::size_t copy = 0; copy < spec.duplicates_per_context; ++copy) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          record.contexts.push_back(make_context(
              desc[i], answer[i][j],
              (i == 0 && j == 0) ? Relation::Duplicated : base_relation(i, j)));
        }
      }
    }
    const std::size_t twin_count =
        scaled_count(spec.ambiguous_fraction, base_count);
    for (std::size_t t = 0; t < twin_count; ++t) {
      const std::size_t target = t % base_count;
      const std::size_t i = target / m;
      const std::size_t j = target % m;
      record.contexts.push_back(make_context(
          std::nullopt, answer[i][j],
          (i == 0 && j == 0) ? Relation::Ambiguous : Relation::None));
    }
    const std::size_t filler_count =
        scaled_count(spec.none_fraction, base_count);
    for (std::size_t f = 0; f < filler_count; ++f) {
      record.contexts.push_back(make_context(
          std::nullopt, pick(cities, city_index++, "settlement"),
          Relation::None));
    }

    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace corg
