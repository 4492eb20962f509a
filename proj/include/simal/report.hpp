#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "simal/error.hpp"
#include "simal/io.hpp"

namespace simal {

  struct Violation {
    std::string property;
    std::string witness;
  };

  // The results tree and everything in the determinism hash are free of
  // timing; elapsed time is kept in the "timing" sidecar.
  class RunReport {
   public:
    explicit RunReport(std::string command);

    // Reads the file and records its SHA-256.
    void add_input(std::filesystem::path const& p);
    void add_input_text(std::string label, std::string const& content);

    io::Json& results() {
      return _results;
    }

    void violation(std::string property, std::string witness);

    std::vector<Violation> const& violations() const {
      return _violations;
    }

    // Exit code from the violations unless an error class was recorded.
    void set_error(Error const& e);
    int  exit_code() const;

    io::Json to_json() const;

    // SHA-256 over the report without the timing sidecar.
    std::string determinism_hash() const;

   private:
    io::Json core() const;

    std::string                                    _command;
    io::Json                                       _inputs = io::Json::array();
    io::Json                                       _results = io::Json::object();
    std::vector<Violation>                         _violations;
    std::optional<Error>                           _error;
    std::chrono::steady_clock::time_point          _start;
  };

  std::string sha256_hex(std::string const& data);

}  // namespace simal
