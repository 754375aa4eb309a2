#include "binvert/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include <httplib.h>

namespace binvert {

std::string oeis_base_url() {
  const char* env = std::getenv("OEIS_BASE_URL");
  if (env != nullptr && *env != '\0') return env;
  return kDefaultOeisBaseUrl;
}

bool is_anum(const std::string& text) {
  if (text.size() != 7 || (text[0] != 'A' && text[0] != 'a')) return false;
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

std::string bfile_name(const std::string& anum) {
  if (!is_anum(anum)) throw std::invalid_argument("not an OEIS A-number: '" + anum + "'");
  return "b" + anum.substr(1) + ".txt";
}

std::string bfile_url(const std::string& base_url, const std::string& anum) {
  std::string base = base_url;
  while (!base.empty() && base.back() == '/') base.pop_back();
  std::string id = anum;
  id[0] = 'A';
  return base + "/" + id + "/" + bfile_name(anum);
}

FetchResult fetch_bfile(const std::string& anum, const std::string& base_url,
                        int timeout_seconds) {
  FetchResult result;
  result.url = bfile_url(base_url, anum);

  const auto scheme_end = result.url.find("://");
  if (scheme_end == std::string::npos) {
    result.error = "base URL has no scheme: " + base_url;
    return result;
  }
  const auto path_begin = result.url.find('/', scheme_end + 3);
  const std::string origin = result.url.substr(0, path_begin);
  const std::string path = result.url.substr(path_begin);

  try {
    httplib::Client client(origin);
    if (!client.is_valid()) {
      result.error = "unsupported URL (https needs a build with OpenSSL): " + origin;
      return result;
    }
    client.set_follow_location(true);
    client.set_connection_timeout(timeout_seconds, 0);
    client.set_read_timeout(timeout_seconds, 0);
    auto response = client.Get(path);
    if (!response) {
      result.error = "request failed: " + httplib::to_string(response.error());
    } else if (response->status != 200) {
      result.error = "HTTP status " + std::to_string(response->status);
    } else {
      result.body = response->body;
    }
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

}  // namespace binvert
