#include "corg/llm.hpp"

#include <cstdlib>
#include <thread>

#include <httplib.h>

namespace corg {

LlmClientConfig llm_config_from_env(LlmClientConfig base) {
  if (const char* url = std::getenv("CORG_API_BASE")) {
    base.base_url = url;
  }
  if (const char* key = std::getenv("CORG_API_KEY")) {
    base.api_key = key;
  }
  if (const char* model = std::getenv("CORG_MODEL")) {
    base.model = model;
  }
  return base;
}

HttpChatTransport::HttpChatTransport(const LlmClientConfig& config)
    : api_key_(config.api_key) {
  // Split scheme://host[:port] from any path prefix such as /v1.
  const std::string& url = config.base_url;
  const std::size_t scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw ConfigError("base url \"" + url + "\" needs a scheme");
  }
  const std::size_t path = url.find('/', scheme + 3);
  if (path == std::string::npos) {
    host_ = url;
  } else {
    host_ = url.substr(0, path);
    path_prefix_ = url.substr(path);
    while (!path_prefix_.empty() && path_prefix_.back() == '/') {
      path_prefix_.pop_back();
    }
  }
}

std::string HttpChatTransport::post_chat(const nlohmann::json& request) {
  httplib::Client client(host_);
  client.set_connection_timeout(30);
  client.set_read_timeout(120);
  httplib::Headers headers;
  if (!api_key_.empty()) {
    headers.emplace("Authorization", "Bearer " + api_key_);
  }
  const auto result = client.Post(path_prefix_ + "/chat/completions", headers,
                                  request.dump(), "application/json");
  if (!result) {
    throw TransportError("request to " + host_ + " failed: " +
                         httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw TransportError("request to " + host_ + " returned status " +
                         std::to_string(result->status) + ": " + result->body);
  }
  return result->body;
}

LlmClient::LlmClient(std::shared_ptr<ChatTransport> transport,
                     LlmClientConfig config,
                     std::chrono::milliseconds backoff_base)
    : transport_(std::move(transport)),
      config_(std::move(config)),
      backoff_base_(backoff_base) {
  if (!transport_) {
    throw ConfigError("llm client needs a transport");
  }
  if (config_.temperature < 0.0) {
    throw ConfigError("temperature must be >= 0");
  }
  if (config_.max_retries < 0) {
    throw ConfigError("max retries must be >= 0");
  }
}

std::string LlmClient::complete(const std::vector<ChatMessage>& messages) {
  nlohmann::json request;
  request["model"] = config_.model;
  request["temperature"] = config_.temperature;
  request["messages"] = nlohmann::json::array();
  for (const ChatMessage& message : messages) {
    request["messages"].push_back(
        {{"role", message.role}, {"content", message.content}});
  }

  std::string last_error;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0 && backoff_base_.count() > 0) {
      auto delay = backoff_base_ * (1 << (attempt - 1));
      if (delay > std::chrono::milliseconds(5000)) {
        delay = std::chrono::milliseconds(5000);
      }
      std::this_thread::sleep_for(delay);
    }
    std::string body;
    try {
      body = transport_->post_chat(request);
    } catch (const TransportError& err) {
      last_error = err.what();
      continue;
    }
    nlohmann::json response;
    try {
      response = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error&) {
      throw TransportError("response is not valid JSON: " + body);
    }
    if (!response.contains("choices") || response["choices"].empty() ||
        !response["choices"][0].contains("message") ||
        !response["choices"][0]["message"].contains("content")) {
      throw TransportError("response lacks choices[0].message.content: " +
                           body);
    }
    return response["choices"][0]["message"]["content"].get<std::string>();
  }
  throw TransportError("request failed after " +
                       std::to_string(config_.max_retries + 1) +
                       " attempts: " + last_error);
}

}  // namespace corg
