#include "qlandau/verify.hpp"

#include <stdexcept>

namespace qlandau::verify {

CheckList run_suite(const std::string& name, std::uint64_t seed,
                    const std::optional<weyl::RatVec3>& nu_override) {
  if (name == "algebra") return algebra_suite(seed);
  if (name == "heisenberg") return heisenberg_suite(seed);
  if (name == "weyl") return weyl_suite(seed, nu_override);
  if (name == "canonical") return canonical_suite(seed);
  if (name == "translations") return translations_suite(seed);
  if (name == "all") {
    CheckList all = algebra_suite(seed);
    for (const auto& suite :
         {heisenberg_suite(seed), weyl_suite(seed, nu_override), canonical_suite(seed),
          translations_suite(seed)})
      all.insert(all.end(), suite.begin(), suite.end());
    return all;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace qlandau::verify
