// Writes the sample corpus: the worked examples plus seeded random lattice
// polytopes in dimensions 2 and 3. Usage: make_corpus OUTDIR [N2 N3 SEED]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "finepoly/io.hpp"
#include "finepoly/polytope.hpp"

namespace fs = std::filesystem;
using namespace finepoly;

namespace {

struct Named {
  const char* file;
  const char* text;
};

const Named kExamples[] = {
    {"ex_parallelepiped.txt",
     "# name: parallelepiped\nV 3 8\n0 0 0\n-1 1 1\n1 -1 1\n1 1 -1\n0 0 2\n2 0 0\n0 2 0\n1 1 1\n"},
    {"ex_five_dim.txt",
     "# name: five-dimensional\n# x_i >= 0, x1+x2+x3+x4+2x5 <= 7, x5 <= 3\nH 5 7\n"
     "1 0 0 0 0 0\n0 1 0 0 0 0\n0 0 1 0 0 0\n0 0 0 1 0 0\n0 0 0 0 1 0\n-1 -1 -1 -1 -2 -7\n0 0 0 0 -1 -3\n"},
    {"ex_simplex_not_closed.txt", "# name: simplex-not-closed\nV 3 4\n-1 -1 -1\n1 1 0\n1 0 1\n0 1 1\n"},
    {"ex_rational_triangle.txt", "# name: rational-triangle\nV 2 3\n-1 0\n0 3/2\n4 -5/2\n"},
    {"ex_elliptic_simplex.txt", "# name: elliptic-simplex\nV 3 4\n0 0 0\n3 0 0\n1 3 0\n2 0 3\n"},
    {"ex_four_dim.txt",
     "# name: four-dimensional\nV 4 10\n0 0 0 0\n1 1 1 1\n2 0 0 0\n0 2 0 0\n0 0 2 0\n0 0 0 2\n"
     "-1 1 1 1\n1 -1 1 1\n1 1 -1 1\n1 1 1 -1\n"},
    {"ex_quintic.txt", "# name: 5-simplex-3d\nV 3 4\n0 0 0\n5 0 0\n0 5 0\n0 0 5\n"},
    {"ex_quartic.txt", "# name: 4-simplex-3d\nV 3 4\n0 0 0\n4 0 0\n0 4 0\n0 0 4\n"},
    {"ex_genus_two.txt", "# name: genus-two\nV 2 3\n0 0\n6 0\n0 2\n"},
    {"ex_unit_cube.txt",
     "# name: unit-cube\nV 3 8\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n1 1 0\n1 0 1\n0 1 1\n1 1 1\n"},
    {"ex_unit_square_h.txt", "# name: unit-square\nH 2 4\n1 0 0\n0 1 0\n-1 0 -1\n0 -1 -1\n"},
    {"ex_diamond.txt", "# name: diamond\nV 2 4\n1 0\n-1 0\n0 1\n0 -1\n"},
    {"ex_triangle3.txt", "# name: 3-simplex-2d\nV 2 3\n0 0\n3 0\n0 3\n"},
    {"ex_octahedron.txt", "# name: octahedron\nV 3 6\n1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n0 0 1\n0 0 -1\n"},
};

std::string random_polytope(std::mt19937_64& rng, std::size_t d, int lo, int hi, const std::string& name) {
  std::uniform_int_distribution<int> coord(lo, hi);
  std::uniform_int_distribution<int> count(static_cast<int>(d) + 1, static_cast<int>(d) + 5);
  while (true) {
    std::vector<LatticeVector> pts(static_cast<std::size_t>(count(rng)));
    for (auto& p : pts)
      for (std::size_t i = 0; i < d; ++i) p.emplace_back(coord(rng));
    Polytope p = Polytope::from_lattice_points(pts);
    if (p.full_dimensional()) return format_vertices(p.vertices(), name);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_corpus OUTDIR [N2 N3 SEED]\n";
    return 1;
  }
  const fs::path out = argv[1];
  const int n2 = argc > 2 ? std::stoi(argv[2]) : 43;
  const int n3 = argc > 3 ? std::stoi(argv[3]) : 43;
  const unsigned long long seed = argc > 4 ? std::stoull(argv[4]) : 20240611ull;
  fs::create_directories(out);

  auto write = [&](const std::string& file, const std::string& text) {
    std::ofstream f(out / file, std::ios::binary | std::ios::trunc);
    f << text;
  };
  for (const auto& e : kExamples) write(e.file, e.text);

  std::mt19937_64 rng(seed);
  char buf[32];
  for (int i = 0; i < n2; ++i) {
    std::snprintf(buf, sizeof buf, "rand2_%03d", i);
    write(std::string(buf) + ".txt", random_polytope(rng, 2, -4, 4, buf));
  }
  for (int i = 0; i < n3; ++i) {
    std::snprintf(buf, sizeof buf, "rand3_%03d", i);
    write(std::string(buf) + ".txt", random_polytope(rng, 3, -3, 3, buf));
  }
  std::cout << "wrote " << std::size(kExamples) + static_cast<std::size_t>(n2 + n3) << " files to " << out << '\n';
  return 0;
}
