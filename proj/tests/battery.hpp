// Symbol battery: unit, s_1..s_d, their conjugates, pairwise products of
// those, and s_1 + conj(s_1).
#pragma once

#include <string>
#include <vector>

#include "symtoep/symbol.hpp"

namespace battery {

struct Named {
  std::string name;
  symtoep::Symbol phi;
};

inline std::vector<Named> symbols(int d) {
  using symtoep::Symbol;
  std::vector<Named> gens{{"1", Symbol::unit(d)}};
  for (int i = 1; i <= d; ++i) {
    gens.push_back({"s" + std::to_string(i), Symbol::elementary(d, i)});
    gens.push_back({"conj(s" + std::to_string(i) + ")", conjugate(Symbol::elementary(d, i))});
  }
  std::vector<Named> out = gens;
  for (std::size_t a = 1; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b)
      out.push_back({gens[a].name + "*" + gens[b].name, gens[a].phi * gens[b].phi});
  out.push_back({"s1+conj(s1)", Symbol::elementary(d, 1) + conjugate(Symbol::elementary(d, 1))});
  out.push_back({"2+s1", symtoep::Scalar(2) * Symbol::unit(d) + Symbol::elementary(d, 1)});
  out.push_back({"s1-i*s" + std::to_string(d),
                 Symbol::elementary(d, 1) - symtoep::Scalar::i() * Symbol::elementary(d, d)});
  if (d == 2) {
    // degree-3 products
    for (std::size_t a = 1; a < gens.size(); ++a)
      for (std::size_t b = a; b < gens.size(); ++b)
        for (std::size_t c = b; c < gens.size(); ++c)
          out.push_back({gens[a].name + "*" + gens[b].name + "*" + gens[c].name,
                         gens[a].phi * gens[b].phi * gens[c].phi});
  }
  return out;
}

}  // namespace battery
