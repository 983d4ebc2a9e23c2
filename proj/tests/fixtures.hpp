#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ikt/symrep.hpp"

namespace fixtures {

using ikt::GroupSpec;
using ikt::LocalModel;
using ikt::SymmetricRep;
using ikt::Weight;

inline Weight unit(int rank, int i, int sign = 1) {
  Weight w = Weight::zero(rank);
  w[i] = sign;
  return w;
}

/// k copies of the standard representation of GL(n) plus k copies of its dual.
inline LocalModel std_plus_dual(int n, int k) {
  std::vector<std::pair<Weight, int>> ws;
  for (int i = 0; i < n; ++i) {
    ws.emplace_back(unit(n, i), k);
    ws.emplace_back(unit(n, i, -1), k);
  }
  return LocalModel(SymmetricRep(GroupSpec({n}), ws));
}

inline LocalModel torus_pm(int k) { return LocalModel(SymmetricRep(GroupSpec({1}), {{Weight{1}, k}, {Weight{-1}, k}})); }

inline LocalModel gl2_adjoint() {
  return LocalModel(SymmetricRep(GroupSpec({2}), {{Weight{0, 0}, 2}, {Weight{1, -1}, 1}, {Weight{-1, 1}, 1}}));
}

inline LocalModel torus2_conifold() {
  return LocalModel(SymmetricRep(GroupSpec({1, 1}), {{Weight{1, 0}, 1},
                                                     {Weight{-1, 0}, 1},
                                                     {Weight{0, 1}, 1},
                                                     {Weight{0, -1}, 1},
                                                     {Weight{1, 1}, 1},
                                                     {Weight{-1, -1}, 1}}));
}

inline LocalModel torus2_doubled() {
  return LocalModel(SymmetricRep(GroupSpec({1, 1}), {{Weight{1, 0}, 2}, {Weight{-1, 0}, 2}, {Weight{0, 1}, 2},
                                                     {Weight{0, -1}, 2}}));
}

inline LocalModel gl2_adjoint_plus_two_std() {
  return LocalModel(SymmetricRep(GroupSpec({2}), {{Weight{0, 0}, 2},
                                                  {Weight{1, -1}, 1},
                                                  {Weight{-1, 1}, 1},
                                                  {Weight{1, 0}, 2},
                                                  {Weight{0, 1}, 2},
                                                  {Weight{-1, 0}, 2},
                                                  {Weight{0, -1}, 2}}));
}

/// GL(1) x GL(2) acting on the tensor product of the two standard representations, plus dual.
inline LocalModel torus_times_gl2() {
  return LocalModel(SymmetricRep(GroupSpec({1, 2}), {{Weight{1, 1, 0}, 1},
                                                     {Weight{1, 0, 1}, 1},
                                                     {Weight{-1, -1, 0}, 1},
                                                     {Weight{-1, 0, -1}, 1}}));
}

struct Named {
  std::string name;
  LocalModel model;
};

/// The five representations named by the acceptance criteria.
inline std::vector<Named> acceptance_models() {
  return {{"torus {+1,-1}", torus_pm(1)},
          {"torus {+1,+1,-1,-1}", torus_pm(2)},
          {"GL(2) adjoint", gl2_adjoint()},
          {"GL(2) 2std+2std*", std_plus_dual(2, 2)},
          {"GL(3) std+std*", std_plus_dual(3, 1)}};
}

/// Further representations with larger windows and several boundary classes.
inline std::vector<Named> supplementary_models() {
  return {{"T2 e1,e2,e1+e2", torus2_conifold()},
          {"T2 2e1,2e2", torus2_doubled()},
          {"GL(2) 3std+3std*", std_plus_dual(2, 3)},
          {"GL(2) adj+2std", gl2_adjoint_plus_two_std()},
          {"GL(3) 2std+2std*", std_plus_dual(3, 2)},
          {"GL(1)xGL(2) tensor", torus_times_gl2()}};
}

}  // namespace fixtures
