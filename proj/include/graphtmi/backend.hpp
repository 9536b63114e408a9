// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "graphtmi/error.hpp"
#include "graphtmi/prompting.hpp"
#include "graphtmi/sampling.hpp"
#include "graphtmi/throttle.hpp"

namespace graphtmi {

struct MajorityVote {};

struct UniformRandom {
  std::uint64_t seed = 0;
};

struct RemoteSettings {
  std::string endpoint;  ///< full URL of the chat-completions route
  std::string model;
  std::string api_key_env = "OPENAI_API_KEY";
  std::size_t requests_per_minute = 10'000;
  std::size_t requests_per_day = 100;
  std::size_t max_retries = 3;
  Millis timeout{60'000};
  /// Omitted from the request when unset.
  std::optional<double> temperature;
  Millis initial_backoff{1'000};
  Millis max_backoff{60'000};
};

struct BackendConfig {
  std::variant<MajorityVote, UniformRandom, RemoteSettings> kind = MajorityVote{};
  bool vision_capable = false;

  /// Throws InvalidArgument for a Remote config without endpoint or model, or
  /// with a zero rate limit.
  void validate() const;
  std::string kind_name() const;
};

/// Full sentence ending in the formatted answer. A label wins only with a strict
/// plurality among the target's labeled neighbors; otherwise the answer is -1.
std::string majority_vote_predict(const SubgraphSample& sample);

/// Label drawn uniformly from [0, class_count), a pure function of
/// (seed, sample_id).
std::string uniform_random_predict(const SubgraphSample& sample, std::uint64_t seed);

// ---- transport -------------------------------------------------------------

struct HttpRequest {
  std::string url;
  std::vector<std::pair<std::string, std::string>> headers;
  std::string body;
  Millis timeout{60'000};
};

struct HttpResponse {
  int status = 0;
  std::string body;
  /// Header names lower-cased.
  std::map<std::string, std::string> headers;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

/// Non-2xx reply that is either not retryable or outlived the retry budget.
class RemoteError : public Error {
 public:
  RemoteError(int status, std::string body)
      : Error("remote returned HTTP " + std::to_string(status) + ": " + body),
        status_(status),
        body_(std::move(body)) {}
  int status() const noexcept { return status_; }
  const std::string& body() const noexcept { return body_; }

 private:
  int status_;
  std::string body_;
};

class RateLimitError : public RemoteError {
 public:
  RateLimitError(std::string body, Millis retry_after)
      : RemoteError(429, std::move(body)), retry_after_(retry_after) {}
  Millis retry_after() const noexcept { return retry_after_; }

 private:
  Millis retry_after_;
};

class Transport {
 public:
  virtual ~Transport() = default;
  /// Throws TransportError when no HTTP response was obtained.
  virtual HttpResponse post(const HttpRequest& request) = 0;
};

/// cpp-httplib client; https URLs need the OpenSSL build.
class HttpTransport final : public Transport {
 public:
  HttpResponse post(const HttpRequest& request) override;
};

// ---- backends --------------------------------------------------------------

struct AttemptRecord {
  std::size_t attempt = 0;  ///< 1-based
  int status = 0;           ///< 0 on transport failure
  std::string error;
  Millis waited{0};  ///< backoff slept before this attempt
};

struct BackendReply {
  std::string raw;
  /// Server-reported usage; unset for offline backends.
  std::optional<std::size_t> reported_tokens;
  std::vector<AttemptRecord> attempts;
};

class PredictionBackend {
 public:
  virtual ~PredictionBackend() = default;
  /// `sample` is the masked sample the bundle was built from.
  virtual BackendReply predict(const SubgraphSample& sample, const PromptBundle& bundle) = 0;
};

class MajorityVoteBackend final : public PredictionBackend {
 public:
  BackendReply predict(const SubgraphSample& sample, const PromptBundle& bundle) override;
};

class UniformRandomBackend final : public PredictionBackend {
 public:
  explicit UniformRandomBackend(std::uint64_t seed) : seed_(seed) {}
  BackendReply predict(const SubgraphSample& sample, const PromptBundle& bundle) override;

 private:
  std::uint64_t seed_;
};

/// Chat-completions JSON body for `bundle`. The image, when present, is a
/// base64 PNG data URL if a rasterizer is built in, SVG otherwise.
std::string chat_request_body(const PromptBundle& bundle, const RemoteSettings& settings);

/// Standard base64 with padding.
std::string base64_encode(std::string_view bytes);

class RemoteBackend final : public PredictionBackend {
 public:
  /// `log_path`, when set, receives one JSON line per attempt with the request
  /// and response bodies; the API key never appears in it.
  RemoteBackend(RemoteSettings settings, bool vision_capable, Transport& transport, Clock& clock,
                std::optional<std::filesystem::path> log_path = std::nullopt);

  BackendReply predict(const SubgraphSample& sample, const PromptBundle& bundle) override;
  /// Same without the sample, which the remote path never reads.
  BackendReply send(const PromptBundle& bundle);

  RateLimiter& limiter() noexcept { return limiter_; }

 private:
  void log_attempt(const HttpRequest& request, const AttemptRecord& attempt, const std::string& response);

  RemoteSettings settings_;
  bool vision_capable_;
  Transport& transport_;
  Clock& clock_;
  RateLimiter limiter_;
  std::optional<std::filesystem::path> log_path_;
  std::string api_key_;
  std::mutex log_mu_;
};

/// Offline kinds need no transport or clock; Remote uses the supplied ones.
std::unique_ptr<PredictionBackend> make_backend(const BackendConfig& config, Transport& transport,
                                                Clock& clock,
                                                std::optional<std::filesystem::path> log_path = std::nullopt);

}  // namespace graphtmi
