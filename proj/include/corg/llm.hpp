#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "corg/types.hpp"

namespace corg {

struct LlmClientConfig {
  std::string base_url = "http://localhost:8000/v1";
  std::string model = "gpt-4";
  std::string api_key;
  double temperature = 0.0;
  int max_retries = 3;
};

/// Reads CORG_API_BASE, CORG_API_KEY, and CORG_MODEL on top of defaults.
LlmClientConfig llm_config_from_env(LlmClientConfig base = {});

struct ChatMessage {
  std::string role;
  std::string content;
};

/// One HTTP round trip; returns the raw response body. Throws
/// TransportError on connection failures and non-2xx statuses.
class ChatTransport {
 public:
  virtual ~ChatTransport() = default;
  virtual std::string post_chat(const nlohmann::json& request) = 0;
};

/// POSTs to {base_url}/chat/completions with a bearer token.
class HttpChatTransport final : public ChatTransport {
 public:
  explicit HttpChatTransport(const LlmClientConfig& config);
  std::string post_chat(const nlohmann::json& request) override;

 private:
  std::string host_;
  std::string path_prefix_;
  std::string api_key_;
};

/// Chat completion client with capped exponential backoff. A request that
/// still fails after the retry budget raises; callers never receive a
/// guessed completion.
class LlmClient {
 public:
  LlmClient(std::shared_ptr<ChatTransport> transport, LlmClientConfig config,
            std::chrono::milliseconds backoff_base =
                std::chrono::milliseconds(200));

  /// Sends the messages and returns the first choice's content.
  std::string complete(const std::vector<ChatMessage>& messages);

  const LlmClientConfig& config() const { return config_; }

 private:
  std::shared_ptr<ChatTransport> transport_;
  LlmClientConfig config_;
  std::chrono::milliseconds backoff_base_;
};

}  // namespace corg
