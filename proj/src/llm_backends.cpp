#include "corg/llm_backends.hpp"

#include <regex>
#include <sstream>

namespace corg {

namespace {

constexpr std::string_view kTriplePrimer =
    "When given a context and a question, we can extract three things from "
    "the context. Answer: answer to the question from the given context "
    "Entity: entity related to the answer in the simplest form Descriptor: "
    "specific detail of the entity that distinguishes it from other "
    "entities. If not given, it is \"Null\" For example, when given a "
    "context containing a sentence \"A feature-length film, The Simpsons "
    "Movie, was released in theaters worldwide on July 27, 2007, to "
    "critical and commercial success, with a sequel in development as of "
    "2018.\" and question \"When was The Simpsons released?\", the answer "
    "to the question is \"July 27, 2007\", the entity is \"The Simpsons\" "
    "and the descriptor is \"Movie\". When a sentence is \"Since The "
    "Simpsons debut on December 17, 1989, 769 episodes of the show have "
    "been broadcast.\", the answer to the question is \"December 17, "
    "1989\", the entity is \"The Simpsons\", and the descriptor is \"Null\" "
    "since there is no specific descriptor in the sentence.";

constexpr std::string_view kRelationDefinitions =
    "For those that the context is relevant to the question, we divide the "
    "document relationship into four and each case are defined as:\n"
    "* Ambiguous: different descriptor with either of the two being Null "
    "and with same answer\n"
    "* None: different descriptor with either of the two being Null and "
    "with different answer\n"
    "* Distracting: different descriptor with neither of the two being "
    "Null\n"
    "* Counterfactual: same descriptor with different answer\n"
    "* Duplicated: same descriptor with same answer\n"
    "When given contexts, could you generate relation from Context1 to rest "
    "of the contexts?";

}  // namespace

std::string relation_prompt(const ParsedContext& pivot,
                            const std::vector<ParsedContext>& others,
                            const Question& question) {
  if (others.empty()) {
    throw ValidationError("relation prompt needs at least one other context");
  }
  std::ostringstream oss;
  oss << kTriplePrimer << "\n\n" << kRelationDefinitions << "\n\n----\n\n";
  oss << "[Context1] Title: " << pivot.title << " Text: " << pivot.body
      << "\n";
  for (std::size_t i = 0; i < others.size(); ++i) {
    oss << "[Context" << (i + 2) << "] Title: " << others[i].title
        << " Text: " << others[i].body << "\n";
  }
  oss << "Question: " << question.text << "\nRelations:";
  return oss.str();
}

std::vector<Relation> parse_relation_reply(const std::string& reply,
                                           std::size_t expected) {
  std::vector<Relation> relations;
  relations.reserve(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    std::ostringstream pattern;
    pattern << "Context" << (i + 2) << "(?!\\d)\\s*[-:]?\\s*([A-Za-z]+)";
    const std::regex re(pattern.str());
    std::smatch match;
    if (!std::regex_search(reply, match, re)) {
      std::ostringstream oss;
      oss << "no relation found for Context" << (i + 2) << " in reply: "
          << reply;
      throw ParseError(oss.str());
    }
    const std::string label = match[1].str();
    try {
      relations.push_back(relation_from_string(label));
    } catch (const ParseError&) {
      std::ostringstream oss;
      oss << "invalid relation label \"" << label << "\" for Context"
          << (i + 2) << " in reply: " << reply;
      throw ParseError(oss.str());
    }
  }
  return relations;
}

std::vector<Relation> llm_classify(const ParsedContext& pivot,
                                   const std::vector<ParsedContext>& others,
                                   const Question& question,
                                   LlmClient& client) {
  const std::string prompt = relation_prompt(pivot, others, question);
  const std::string reply = client.complete({{"user", prompt}});
  return parse_relation_reply(reply, others.size());
}

Relation LlmRelationOracle::classify(const ParsedContext& pivot,
                                     const ParsedContext& other,
                                     const Question& question) {
  return llm_classify(pivot, {other}, question, client_)[0];
}

std::string LlmGenerator::generate(const std::string& question_form,
                                   const std::vector<ParsedContext>& contexts) {
  return client_.complete({{"user", render_prompt(question_form, contexts)}});
}

std::string context_generation_prompt(const std::string& question,
                                      const std::string& answer,
                                      const std::vector<std::string>& issues) {
  std::ostringstream oss;
  oss << "Given a question and an answer, generate an evidence context "
         "consisting of 6-7 sentences. The purpose of the context is for "
         "people to read and answer the question. The answer and "
         "information in the context do not have to be true.\n\n"
      << "Question: how many episodes are in chicago fire in season 4?\n"
      << "Answer: 103\n"
      << "Context: The fourth season of Chicago Fire , an American drama "
         "television series with executive producer Dick Wolf , and "
         "producers Derek Haas , Michael Brandt , and Matt Olmstead , was "
         "ordered on February 5 , 2015 , by NBC , and premiered on October "
         "13 , 2015 and concluded on May 17 , 2016 . The season contained "
         "103 episodes .\n\n"
      << "Question: how many episodes are in chicago fire?\n"
      << "Answer: 103\n"
      << "Context: Chicago Fire is a gripping American drama television "
         "series comprised of 103 episodes that delves into the lives of "
         "the firefighters, rescue personnel, and paramedics of Firehouse "
         "51 of the Chicago Fire Department. The series offers an inside "
         "look at the professional and personal challenges faced by these "
         "brave men and women as they risk their lives to save others. The "
         "show captures the intense camaraderie, complex relationships, and "
         "high-stakes situations that define their everyday existence. With "
         "a compelling mix of action, drama, and emotional depth, Chicago "
         "Fire provides an authentic and engaging portrayal of life on the "
         "front lines of emergency response.\n\n"
      << "Question: " << question << "\n"
      << "Answer: " << answer << "\n";
  for (const std::string& issue : issues) {
    oss << "Issue with the previous attempt: " << issue << "\n";
  }
  oss << "Context:";
  return oss.str();
}

std::string sub_question_prompt(const std::string& question,
                                const std::vector<std::string>& answers) {
  std::ostringstream oss;
  oss << "Given a question and list of answers, generate a detailed "
         "question for each of the given answer should be answer to the "
         "question respectively. Please note that the number of given "
         "answers should be the same with generated detailed questions and "
         "the answer should NOT be in the generated question.\n"
      << "---\n"
      << "question: who proposed evolution as the basis of biological "
         "development?\n"
      << "answers: Jodie Foster, Mara Jade, Yeh Raaste Hain Pyaar Ke, Billy "
         "Joel, Rigg\n\n"
      << "detailed questions: who proposed evolution in 1859 as the basis "
         "of biological development? // who proposed evolution in 1863 as "
         "the basis of biological development? // who proposed evolution as "
         "the basis of biological development in 1871? // who proposed "
         "evolution as the basis of biological development in 1921? // who "
         "proposed evolution as the basis of biological development in "
         "1951?\n"
      << "---\n"
      << "question: who sings gim me some lovin in days of thunder?\n"
      << "answers: AB de Villiers, UMBC, Nashville Predators\n\n"
      << "detailed questions: who first sings gim me some lovin in days of "
         "thunder? // who remake gim me some lovin in days of thunder? // "
         "who sings gim me some lovin in days of thunder part 2?\n"
      << "---\n"
      << "question: how many episodes of grey anatomy?\n"
      << "answers: 501, 216\n\n"
      << "detailed questions: how many episodes of greys anatomy season "
         "14? // how many episodes of greys anatomy season 12?\n"
      << "---\n"
      << "question: " << question << "\n"
      << "answers: ";
  for (std::size_t i = 0; i < answers.size(); ++i) {
    if (i > 0) {
      oss << ", ";
    }
    oss << answers[i];
  }
  oss << "\n\ndetailed questions:";
  return oss.str();
}

std::vector<std::string> parse_sub_question_reply(const std::string& reply,
                                                  std::size_t expected) {
  std::vector<std::string> questions;
  std::size_t start = 0;
  while (start <= reply.size()) {
    std::size_t split = reply.find("//", start);
    if (split == std::string::npos) {
      split = reply.size();
    }
    std::string piece = reply.substr(start, split - start);
    const std::size_t first = piece.find_first_not_of(" \t\r\n");
    if (first != std::string::npos) {
      const std::size_t last = piece.find_last_not_of(" \t\r\n");
      questions.push_back(piece.substr(first, last - first + 1));
    }
    if (split == reply.size()) {
      break;
    }
    start = split + 2;
  }
  if (questions.size() != expected) {
    std::ostringstream oss;
    oss << "expected " << expected << " detailed questions, found "
        << questions.size() << " in reply: " << reply;
    throw ParseError(oss.str());
  }
  return questions;
}

}  // namespace corg
