#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "kbracket/canon.hpp"
#include "kbracket/error.hpp"
#include "kbracket/gauss_code.hpp"

using namespace kbracket;

namespace {

GaussCode random_signed_code(std::mt19937_64& rng, int n) {
  std::vector<int> pos(static_cast<std::size_t>(2 * n));
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = static_cast<int>(i);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::vector<Passage> comp(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    const int sign = (rng() % 2) ? 1 : -1;
    const bool flip = rng() % 2;
    comp[static_cast<std::size_t>(pos[static_cast<std::size_t>(2 * k)])] =
        {k + 1, flip ? Role::Under : Role::Over, sign};
    comp[static_cast<std::size_t>(pos[static_cast<std::size_t>(2 * k + 1)])] =
        {k + 1, flip ? Role::Over : Role::Under, sign};
  }
  GaussCode code;
  code.components.push_back(std::move(comp));
  return code;
}

std::string web_fingerprint(const Web& w) {
  auto [parts, circles] = components(w);
  std::vector<std::string> keys;
  for (const auto& p : parts) keys.push_back(canonical_form(p).str());
  std::sort(keys.begin(), keys.end());
  std::string out = "circles=" + std::to_string(circles);
  for (const auto& k : keys) out += "|" + k;
  return out;
}

std::string thrown_class(const std::string& text) {
  try {
    parse_gauss(text);
  } catch (const Error& e) {
    return e.cls();
  }
  return "";
}

bool interleaved(const std::vector<Passage>& comp, int a, int b) {
  std::vector<int> seq;
  for (const auto& p : comp)
    if (p.crossing == a || p.crossing == b) seq.push_back(p.crossing);
  return seq.size() == 4 && seq[0] != seq[1] && seq[1] != seq[2] && seq[2] != seq[3];
}

} // namespace

TEST_CASE("gauss parsing round trips") {
  for (const std::string& text :
       {std::string("O1+,U1+"), std::string("O1+,U2+,O3+,U1+,O2+,U3+"),
        std::string("O1+,U2+;U1+,O2+"), std::string("O1+,O2+,U1+,U2+"),
        std::string("1,2,1,2"), std::string("1,2,3,1,2,3"), std::string("")}) {
    GaussCode code = parse_gauss(text);
    CHECK(to_string(code) == text);
    CHECK(same_code(code, parse_gauss(to_string(code))));
  }
  GaussCode kink = parse_gauss("O1+,U1+");
  CHECK(!kink.free_mode);
  CHECK(kink.crossing_count() == 1);
  CHECK(kink.sign_of(1) == 1);
  CHECK(parse_gauss("1,2,1,2").free_mode);
  CHECK(parse_gauss("").components.size() == 1);
  CHECK(parse_gauss("").crossing_count() == 0);
  CHECK(parse_gauss(" O1+ , U1+ ").crossing_count() == 1); // whitespace tolerated
}

TEST_CASE("gauss parse errors") {
  CHECK(thrown_class("O1+,U2+") == "parse.missing-passage");
  CHECK(thrown_class("O1+,U1+,O1+,U1+") == "parse.duplicate-passage");
  CHECK(thrown_class("1,1,1,1") == "parse.duplicate-passage");
  CHECK(thrown_class("O1+,O1+") == "parse.role-mismatch");
  CHECK(thrown_class("O1+,U1-") == "parse.sign-mismatch");
  CHECK(thrown_class("O1+,2,U1+") == "parse.mixed-mode");
  CHECK(thrown_class("X1+,Y1+") == "parse.token");
  CHECK(thrown_class("O1,U1") == "parse.token");
  CHECK(thrown_class("1+,1+") == "parse.token");
  CHECK(thrown_class("O1+,U1+;1,1") == "parse.mixed-mode");
}

TEST_CASE("writhe") {
  CHECK(writhe(parse_gauss("O1+,U1+")) == 1);
  CHECK(writhe(parse_gauss("O1-,U1-")) == -1);
  CHECK(writhe(parse_gauss("O1+,U2-,U1+,O2-")) == 0);
  CHECK(writhe(parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+")) == 3);
  CHECK(writhe(parse_gauss("O1+,U2+;U1+,O2+")) == 2);
  CHECK_THROWS_AS(writhe(parse_gauss("1,2,1,2")), Error);
  try {
    writhe(parse_gauss("1,2,1,2"));
  } catch (const Error& e) {
    CHECK(e.cls() == "mode.signed-required");
  }
}

TEST_CASE("state counting and weights") {
  CHECK(state_count(parse_gauss("")) == 1);
  CHECK(state_count(parse_gauss("O1+,U1+")) == 2);
  CHECK(state_count(parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+")) == 8);
  CHECK_THROWS_AS(state_count(ngon_code(63)), Error);

  GaussCode kink = parse_gauss("O1+,U1+");
  CHECK(state_weight(kink, {0}) == LaurentPoly::term(1, 2));
  CHECK(state_weight(kink, {1}) == LaurentPoly::term(-1, -1));

  GaussCode neg = parse_gauss("O1-,U1-");
  CHECK(state_weight(neg, {0}) == LaurentPoly::term(1, -2));
  CHECK(state_weight(neg, {1}) == LaurentPoly::term(-1, 1));

  GaussCode tref = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+");
  CHECK(state_weight(tref, {7}) == LaurentPoly::term(-1, -3));
  CHECK(state_weight(tref, {0}) == LaurentPoly::term(1, 6));

  CHECK_THROWS_AS(state_weight(parse_gauss("1,1"), {0}), Error);
}

TEST_CASE("state webs of the small examples") {
  Web empty = state_web(parse_gauss(""), {0});
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.circles == 1);

  GaussCode kink = parse_gauss("O1+,U1+");
  Web pass = state_web(kink, {0});
  CHECK(pass.vertex_count() == 0);
  CHECK(pass.circles == 2);
  Web smooth = state_web(kink, {1});
  CHECK(smooth.circles == 0);
  CHECK(is_isomorphic(smooth, theta_web()));
  CHECK(unoriented_state_web(kink) == smooth);

  GaussCode vtref = parse_gauss("O1+,O2+,U1+,U2+");
  Web all_pass = state_web(vtref, {0});
  CHECK(all_pass.vertex_count() == 0);
  CHECK(all_pass.circles == 1);
  Web kus = unoriented_state_web(vtref);
  CHECK(kus.vertex_count() == 4);
  CHECK(is_isomorphic(kus, fixtures::ladder()));

  GaussCode tref = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+");
  Web tkus = unoriented_state_web(tref);
  CHECK(tkus.vertex_count() == 6);
  CHECK(find_bigons(tkus).size() == 3);

  GaussCode hopf = parse_gauss("O1+,U2+;U1+,O2+");
  Web hpass = state_web(hopf, {0});
  CHECK(hpass.circles == 2);
}

TEST_CASE("state webs are valid with one source per unoriented smoothing") {
  std::mt19937_64 rng(811);
  for (int iter = 0; iter < 80; ++iter) {
    GaussCode code = random_signed_code(rng, 1 + static_cast<int>(rng() % 6));
    const std::uint64_t states = state_count(code);
    for (int rep = 0; rep < 4; ++rep) {
      State s{rng() % states};
      Web w = state_web(code, s);
      require_valid(w);
      CHECK(static_cast<int>(w.sources.size()) == __builtin_popcountll(s.mask));
    }
  }
}

TEST_CASE("state webs ignore basepoint and role data") {
  std::mt19937_64 rng(271);
  for (int iter = 0; iter < 40; ++iter) {
    GaussCode code = random_signed_code(rng, 1 + static_cast<int>(rng() % 5));
    const std::uint64_t states = state_count(code);
    State s{rng() % states};
    Web base = state_web(code, s);

    GaussCode rotated = code;
    auto& comp = rotated.components[0];
    std::rotate(comp.begin(), comp.begin() + static_cast<long>(rng() % comp.size()),
                comp.end());
    CHECK(web_fingerprint(state_web(rotated, s)) == web_fingerprint(base));

    // role flips act on crossings, not on the smoothing rule
    GaussCode zall = code;
    for (auto& p : zall.components[0])
      p.role = (p.role == Role::Over) ? Role::Under : Role::Over;
    CHECK(web_fingerprint(state_web(zall, s)) == web_fingerprint(base));
  }
}

TEST_CASE("diagram girth") {
  CHECK(diagram_girth(parse_gauss("O1+,U1+")) == 1);
  CHECK(diagram_girth(parse_gauss("O1+,O2+,U1+,U2+")) == 2);
  CHECK(diagram_girth(parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+")) == 2);
  CHECK(diagram_girth(ngon_code(7)) == 3);
  CHECK_THROWS_AS(diagram_girth(parse_gauss("")), Error);
}

TEST_CASE("ngon codes") {
  for (int n : {5, 6, 7, 8, 9}) {
    GaussCode code = ngon_code(n);
    CHECK(code.free_mode);
    CHECK(code.crossing_count() == n);
    CHECK(static_cast<int>(code.components[0].size()) == 2 * n);
  }
  CHECK_THROWS_AS(ngon_code(2), Error);

  // the interleavement graph of the 7-gon code is a 7-cycle
  GaussCode k7 = ngon_code(7);
  const auto& comp = k7.components[0];
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) {
      const bool adjacent = (b == a + 1) || (a == 1 && b == 7);
      CHECK(interleaved(comp, a, b) == adjacent);
    }

  GaussCode signed7 = ngon_code(7, true);
  CHECK(!signed7.free_mode);
  CHECK(writhe(signed7) == 7);
  CHECK(same_code(to_free(signed7), k7));
}

TEST_CASE("code transforms") {
  GaussCode kink = parse_gauss("O1+,U1+");
  CHECK(same_code(mirror_code(kink), parse_gauss("O1-,U1-")));
  CHECK(same_code(mirror_code(mirror_code(kink)), kink));

  GaussCode tref = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+");
  CHECK(writhe(mirror_code(tref)) == -3);
  CHECK(same_code(mirror_code(mirror_code(tref)), tref));

  GaussCode both = split_union(kink, tref);
  CHECK(both.components.size() == 2);
  CHECK(both.crossing_count() == 4);
  CHECK(writhe(both) == 4);

  CHECK(to_free(tref).free_mode);
  CHECK(same_code(with_signs(to_free(tref)), with_signs(to_free(tref))));
}

TEST_CASE("same_code equivalences") {
  GaussCode tref = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+");
  CHECK(same_code(tref, parse_gauss("U3+,O1+,U2+,O3+,U1+,O2+"))); // rotation
  CHECK(same_code(tref, parse_gauss("O5+,U9+,O2+,U5+,O9+,U2+"))); // renaming
  CHECK(!same_code(tref, mirror_code(tref)));
  CHECK(!same_code(tref, parse_gauss("O1+,U1+")));
  CHECK(same_code(parse_gauss("O1+,U2+;U1+,O2+"), parse_gauss("U2+,O1+;O2+,U1+")));
  CHECK(same_code(parse_gauss("1,2,1,2"), parse_gauss("2,1,2,1")));
  CHECK(!same_code(parse_gauss("1,2,1,2"), parse_gauss("O1+,O2+,U1+,U2+")));
}

TEST_CASE("all-oriented states of classical codes are planar webs") {
  // classical (realizable) codes produce planar state webs, whose girth
  // can only be 2 or 4 once vertices are present
  std::vector<GaussCode> classical = {
      parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+"),
      parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+,O4+,U5+,O6+,U4+,O5+,U6+"),
      parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+,O4-,U5-,O6-,U4-,O5-,U6-"),
      parse_gauss("O1+,U2+,O3+,U4+;U1+,O2+,U3+,O4+"),
      parse_gauss("O1+,U2+;U1+,O2+"),
      parse_gauss("O1+,U1+,O2-,U2-"),
      parse_gauss("O1+,U2-,U1+,O2-"),
  };
  for (const auto& code : classical) {
    const std::uint64_t states = state_count(code);
    for (std::uint64_t mask = 0; mask < states; ++mask) {
      Web w = state_web(code, {mask});
      if (w.vertex_count() == 0) continue;
      const int g = web_girth(w);
      CHECK((g == 2 || g == 4));
    }
  }
}
