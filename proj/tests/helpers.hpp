#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "webcoord/io.hpp"
#include "webcoord/webcoord.hpp"

namespace webcoord::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(WEBCOORD_FIXTURE_DIR) / name;
}

inline std::shared_ptr<const IdealTriangulation> load_fixture_triangulation(
    const std::string& name) {
  return load_triangulation_file(fixture_path(name));
}

inline std::shared_ptr<const IdealTriangulation> torus() {
  return load_fixture_triangulation("torus.json");
}

inline std::shared_ptr<const IdealTriangulation> sphere4() {
  return load_fixture_triangulation("sphere4.json");
}

inline TriangleWeb make_tweb(const std::string& c0, const std::string& c1, const std::string& c2,
                             Honeycomb h = {}) {
  TriangleWeb w;
  w.corners = {c0, c1, c2};
  w.honeycomb = h;
  w.validate();
  return w;
}

// The fixture loop on the once-punctured torus: one R arc in T0's first
// corner, one L arc in T1's.
inline GlobalWeb torus_loop_web() {
  GlobalWeb w = GlobalWeb::empty(torus());
  w.webs[0] = make_tweb("R", "", "");
  w.webs[1] = make_tweb("L", "", "");
  return w;
}

inline GlobalWeb honeycomb_pair_web() {
  GlobalWeb w = GlobalWeb::empty(torus());
  w.webs[0] = make_tweb("", "", "", Honeycomb{HoneycombDir::out, 1});
  w.webs[1] = make_tweb("", "", "", Honeycomb{HoneycombDir::in, 1});
  return w;
}

// Two parallel loops crossing twice: the square fixture.
inline GlobalWeb two_loop_square_web() {
  GlobalWeb w = GlobalWeb::empty(torus());
  w.webs[0] = make_tweb("RL", "", "");
  w.webs[1] = make_tweb("LR", "", "");
  return w;
}

// The square-free variant of the same contents.
inline GlobalWeb two_loop_free_web() {
  GlobalWeb w = GlobalWeb::empty(torus());
  w.webs[0] = make_tweb("RL", "", "");
  w.webs[1] = make_tweb("RL", "", "");
  return w;
}

// The eight generator coordinate vectors (honeycombs at multiplicity n).
inline LocalConePoint gen_r(int corner) {
  TriangleWeb w;
  w.corners[corner] = "R";
  return local_coords(w);
}
inline LocalConePoint gen_l(int corner) {
  TriangleWeb w;
  w.corners[corner] = "L";
  return local_coords(w);
}
inline LocalConePoint gen_h(HoneycombDir dir, int n) {
  TriangleWeb w;
  w.honeycomb = Honeycomb{dir, n};
  return local_coords(w);
}

} // namespace webcoord::testing
