// A short tour: normal forms, the pairing, a module, a crystal.

#include <iostream>

#include "qgroups/qgroups.hpp"

using namespace qgroups;

int main() {
  const uq::UElement ef = uq::multiply(uq::E(), uq::F());
  std::cout << "E*F = " << ef << "\n";
  std::cout << "Delta(E) = " << uq::render(uq::coproduct(uq::E())) << "\n";
  std::cout << "S(F) = " << uq::antipode(uq::F()) << "\n";

  std::cout << "X11*X22 = " << oq::multiply(oq::X11(), oq::X22()) << "\n";
  std::cout << "(K, X11) = " << pair(uq::K(), oq::X11()).to_string() << "\n";
  std::cout << "X11 . EK^-1 = " << right_action(oq::X11(), uq::parse("E*K^-1")) << "\n\n";

  std::cout << "generator pairings:\n" << PairingTable::compute().to_text() << "\n";

  const ModuleRep v2 = build_module(2);
  std::cout << "V(2): " << verify_relations(v2).to_text() << "\n";

  const Crystal c = tensor(b_n(2), b_n(1));
  std::cout << "B(2) (x) B(1) components:";
  for (long h : decompose_rank1(c)) std::cout << " " << h;
  std::cout << "\n" << to_dot(c);
}
