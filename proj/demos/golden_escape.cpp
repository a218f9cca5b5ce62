// Certifies that two arithmetic progressions leave S(3): one with a rational
// gap (closed-form certificate) and one with gap (1+sqrt(5))/2 (bounded
// search). Each certificate is re-checked by an independent membership query
// before printing.

#include <iostream>

#include "apfree/apfree.hpp"

int main() {
  using namespace apfree;
  set_spec s3 = set_spec::make_basic(3);

  auto show = [&](const escape_certificate& cert) {
    bool still_inside = contains(s3, cert.x_n);
    std::cout << to_json(cert).dump(2) << "\n";
    std::cout << "re-check: x_n = " << cert.x_n.str() << " is "
              << (still_inside ? "INSIDE (bug!)" : "outside") << " the set\n\n";
  };

  std::cout << "Constructive certificate for x0 = 1/2, delta = 5/6:\n";
  show(certify_escape_rational(3, rational(1, 2), rational(5, 6)));

  std::cout << "Search certificate for x0 = 1/2, delta = (1+sqrt(5))/2:\n";
  progression pr{certified_real(rational(1, 2)), parse_exact("(1+sqrt(5))/2")};
  auto cert = certify_escape_search(s3, pr, 1000000);
  if (!cert) {
    std::cout << "no witness within depth (unexpected)\n";
    return 1;
  }
  show(*cert);
  return 0;
}
