#include "simal/report.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace simal {

  std::string sha256_hex(std::string const& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
      fail(Errc::io_error, "SHA-256 failed");
    }
    std::ostringstream out;
    for (unsigned i = 0; i < len; ++i) {
      out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return out.str();
  }

  RunReport::RunReport(std::string command)
      : _command(std::move(command)), _start(std::chrono::steady_clock::now()) {}

  void RunReport::add_input(std::filesystem::path const& p) {
    std::string content = io::read_text(p);
    _inputs.push_back({{"path", p.generic_string()}, {"sha256", sha256_hex(content)}});
  }

  void RunReport::add_input_text(std::string label, std::string const& content) {
    _inputs.push_back({{"path", std::move(label)}, {"sha256", sha256_hex(content)}});
  }

  void RunReport::violation(std::string property, std::string witness) {
    _violations.push_back({std::move(property), std::move(witness)});
  }

  void RunReport::set_error(Error const& e) {
    _error = e;
    if (e.error_class() == ErrorClass::property) {
      violation(std::string(errc_name(e.code())), e.what());
    }
  }

  int RunReport::exit_code() const {
    if (_error) {
      return static_cast<int>(_error->error_class());
    }
    return _violations.empty() ? 0 : static_cast<int>(ErrorClass::property);
  }

  io::Json RunReport::core() const {
    io::Json v = io::Json::array();
    for (auto const& x : _violations) {
      v.push_back({{"property", x.property}, {"witness", x.witness}});
    }
    io::Json j{{"command", _command}, {"inputs", _inputs}, {"results", _results},
               {"violations", v}, {"exit_code", exit_code()}};
    if (_error) {
      j["error"] = {{"code", std::string(errc_name(_error->code()))}, {"message", _error->what()}};
    }
    return j;
  }

  std::string RunReport::determinism_hash() const {
    return sha256_hex(core().dump());
  }

  io::Json RunReport::to_json() const {
    io::Json j            = core();
    j["determinism_hash"] = determinism_hash();
    auto ms               = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - _start)
                  .count();
    j["timing"] = {{"elapsed_ms", ms}};
    return j;
  }

}  // namespace simal
