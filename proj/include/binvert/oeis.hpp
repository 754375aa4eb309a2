#pragma once

#include <optional>
#include <string>

namespace binvert {

inline constexpr const char* kDefaultOeisBaseUrl = "https://oeis.org";

// OEIS_BASE_URL if set and non-empty, else the public site.
std::string oeis_base_url();

// "A002478" style identifier.
bool is_anum(const std::string& text);

// "A002478" -> "b002478.txt"
std::string bfile_name(const std::string& anum);

// <base>/<anum>/b<digits>.txt
std::string bfile_url(const std::string& base_url, const std::string& anum);

struct FetchResult {
  std::string url;
  std::optional<std::string> body;
  std::string error;
};

// Downloads a b-file over http (or https when built with OpenSSL). Never
// throws for network problems; the error is reported in the result.
FetchResult fetch_bfile(const std::string& anum, const std::string& base_url,
                        int timeout_seconds = 20);

}  // namespace binvert
