#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nilary/classifier.hpp"
#include "nilary/corpus.hpp"

namespace nilary {

class QueryError : public Error {
 public:
  using Error::Error;
};

enum class HuntTarget { zero_ideal, any_ideal };

// What a query atom can look at for one (ring, ideal) instance.
struct HuntInstance {
  const PropertyReport* report = nullptr;
  const RingFacts* facts = nullptr;
  bool ideal_is_nil = false;
  bool ideal_is_zero = false;
};

// Flat boolean query over predicate names and the instance atoms
//   proper commutative unital nil zero prime_power_char
// combined with and / or / not and parentheses. Precedence: not > and > or.
class HuntQuery {
 public:
  static HuntQuery parse(std::string_view text);

  bool matches(const HuntInstance& instance) const;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

struct HuntMatch {
  std::string ring_label;
  ElementSet ideal;
  PropertyReport report;
};

std::vector<HuntMatch> hunt(const Corpus& corpus, const HuntQuery& query, HuntTarget target);

}  // namespace nilary
