#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bf/cohomology.hpp"
#include "bf/homology.hpp"
#include "bf/ring.hpp"

namespace bf {

// coefficient system of the q-th row: Spin (Z, Z/2, Z/2, 0, Z) or SO (Z, 0, 0, 0, Z), twisted by w1 on q = 0, 4
Coeff jss_coefficient(const Xi1Type& xi, int q);
std::string jss_coefficient_label(const Xi1Type& xi, int q);

struct E2Entry {
  int p = 0, q = 0;
  Coeff coeff = Coeff::Zero;
  std::optional<HomologyPresentation> h;  // empty when the model exceeds its size budget
  std::string unavailable;                // reason when h is empty
};

struct E2Page {
  Xi1Type xi;
  bool so_table = false;
  std::map<std::pair<int, int>, E2Entry> entries;  // p <= 5, q <= 4
  const E2Entry& at(int p, int q) const;
};

E2Page e2_page(const Xi1Type& xi);

struct E3Entry {
  int p = 0, q = 0;
  std::vector<int64_t> factors;
  std::vector<ZVec> generators;  // representative cycles in the E2 model
  std::vector<H1Class> h1;       // p = 1 only: generators as classes in I/IJ
  bool upper_bound = false;
  std::string note;
};

struct E3Options {
  bool assume_d3_30_zero = false;
};

// E3_{p,3-p} for p = 0..3
std::vector<E3Entry> e3_degree3(const Xi1Type& xi, const E3Options& opt = {});

struct FiltrationReport {
  Xi1Type xi;
  std::vector<E3Entry> e3;          // p = 0..3
  std::vector<H1Class> d3_image;    // span inside H_1(pi; Z/2)
  std::string provenance;           // "user-declared" or "delta3-computed"
  std::vector<E3Entry> quotients;   // F_{p,3-p} / F_{p-1,4-p}, p = 0..3
};

FiltrationReport filtration_report(const Xi1Type& xi, const std::vector<H1Class>& d3_image,
                                   const std::string& provenance, const E3Options& opt = {});

// coordinates of an abelianization class in the stored H_1(pi; Z/2) generator basis
BitVec h1_to_generator_coords(const HomologyPresentation& h1, const H1Class& c);

}  // namespace bf
