// Walks the normal forms: type, invariants under a change of basis, cohomology,
// and the B1 -> A1 contraction.

#include <iostream>

#include "bianchi.hpp"

using namespace bianchi;

int main() {
  const Tables t = expected_tables();
  const GLTransform psi(Mat3{{1, 2, 0}, {0, 1, -1}, {3, 0, 1}});

  for (const auto& row : t.unimodular) {
    const StructureTensor q(row.q);
    const CohomologyReport rep = cohomology_report(q);
    std::cout << row.type << ": classify -> " << classify(q).name() << ", after psi -> "
              << classify(act(psi, q)).name() << ", dim Z2/B2/H2 = " << rep.dim_Z2 << "/" << rep.dim_B2 << "/"
              << rep.dim_H2 << '\n';
  }
  for (const auto& row : t.non_unimodular) {
    const StructureTensor q(row.q);
    const BianchiType type = classify(act(psi, q));
    std::cout << row.type << ": after psi -> " << type.name();
    if (type.rho) std::cout << " (rho = " << type.rho->str() << ")";
    std::cout << '\n';
  }

  Mat3 e11;
  e11(0, 0) = 1;
  const StructureTensor a1(e11);
  const DeformationPath path = deform(a1, a1 + charge(2), {0, Rational(Integer(1), Integer(2)), 1});
  std::cout << "\n(1-t) A1 + t B1:";
  for (const auto& s : path.samples) std::cout << "  t=" << s.t.str() << " " << s.type.name();
  std::cout << "\nverdict: " << to_string(contraction_verdict(path)) << '\n';
}
