#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "simal/corpus.hpp"
#include "simal/io.hpp"
#include "simal/report.hpp"

namespace simal::acceptance {

  struct CriterionResult {
    int                    id = 0;
    std::string            title;
    size_t                 checks  = 0;
    size_t                 skipped = 0;
    std::vector<Violation> failures;
    io::Json               details = io::Json::object();
    double                 seconds = 0;  // not part of json()

    bool passed() const {
      return failures.empty() && checks > 0;
    }

    io::Json json() const;
  };

  struct Options {
    corpus::Profile profile = corpus::Profile::desk;
    std::uint64_t   seed    = 7;
    size_t          budget  = default_limit_budget;
    // Criteria to run, 1..10; empty means all.
    std::vector<int> only;
  };

  std::vector<std::string> const& criterion_titles();

  // Runs the selected criteria over one shared corpus; progress receives each
  // result as soon as it is done.
  std::vector<CriterionResult> run(
      Options const& opt, std::function<void(CriterionResult const&)> const& progress = {});

  std::vector<CriterionResult> run(
      corpus::Corpus const& c, Options const& opt,
      std::function<void(CriterionResult const&)> const& progress = {});

  // "[PASS] 3 h1 triple equality and image of meets (42 checks)"
  std::string summary_line(CriterionResult const& r);

  // Equivalence closure of the union of two partitions, by plain union-find
  // on the block arrays; independent of the congruence join.
  std::vector<Elem> equivalence_join(std::vector<Elem> const& a, std::vector<Elem> const& b);

}  // namespace simal::acceptance
