// command-line interface: exact-arithmetic models, forgetful maps, congruence
// scans, point search, local solubility and the full verification run
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ninecong/catalog.hpp"
#include "ninecong/congruence.hpp"
#include "ninecong/diophantine.hpp"
#include "ninecong/specialize.hpp"
#include "ninecong/surfaces.hpp"
#include "ninecong/verify.hpp"

using namespace ninecong;
using nlohmann::json;

namespace {

std::vector<Rat> parse_rat_list(std::string s, size_t n, const std::string& what) {
  if (!s.empty() && s.front() == '[') s = s.substr(1);
  if (!s.empty() && s.back() == ']') s.pop_back();
  std::vector<Rat> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) out.push_back(parse_rat(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != n) throw std::invalid_argument(what + ": expected " + std::to_string(n) + " entries");
  return out;
}

// "[a1,a2,a3,a4,a6]" or "short:[a,b]"
Curve<Rat> parse_curve(const std::string& s) {
  if (s.rfind("short:", 0) == 0) {
    auto v = parse_rat_list(s.substr(6), 2, "short curve");
    return make_short_curve(v[0], v[1]);
  }
  auto v = parse_rat_list(s, 5, "curve");
  return make_curve(v[0], v[1], v[2], v[3], v[4]);
}

// coefficients of a y^2 = x^3 + a x + b model of the curve
std::pair<Rat, Rat> curve_ab(const Curve<Rat>& e) {
  if (is_zero(e.a1) && is_zero(e.a2) && is_zero(e.a3)) return {e.a4, e.a6};
  auto v = invariants(e);
  return {Rat(-27) * v.c4, Rat(-54) * v.c6};
}

Sign parse_sign(const std::string& s) {
  if (s == "direct") return Sign::direct;
  if (s == "reverse") return Sign::reverse;
  throw std::invalid_argument("sign must be direct or reverse");
}

json curve_json(const Curve<Rat>& e) {
  return json{{"a1", to_string(e.a1)},
              {"a2", to_string(e.a2)},
              {"a3", to_string(e.a3)},
              {"a4", to_string(e.a4)},
              {"a6", to_string(e.a6)}};
}

json point_json(const std::vector<Rat>& p) {
  json a = json::array();
  for (const auto& x : p) a.push_back(to_string(x));
  return a;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const std::string& what) {
  emit(json{{"schema", 1}, {"error", what}});
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact models and verification for families of 9-congruent elliptic curves"};
  app.require_subcommand(1);

  std::string curve_s, e1_s, e2_s, sign_s = "direct", point_s, matrix_s, json_out;
  int modulus = 9, depth = 3, multiples = 0;
  long height = 3;
  uint64_t bound = 1000, prime = 7;
  std::string specialize_s;
  std::vector<std::string> skips;

  auto* c_model = app.add_subcommand("model", "print the two cubics of the twisted level-9 model");
  c_model->add_option("--curve", curve_s)->required();
  c_model->add_option("--sign", sign_s);

  auto* c_forget = app.add_subcommand("forget", "map a point on the model to (r:s) and the congruent curve");
  c_forget->add_option("--curve", curve_s)->required();
  c_forget->add_option("--sign", sign_s);
  c_forget->add_option("--point", point_s)->required();

  auto* c_verify = app.add_subcommand("verify", "trace congruence scan for two curves");
  c_verify->add_option("--e1", e1_s)->required();
  c_verify->add_option("--e2", e2_s)->required();
  c_verify->add_option("--mod", modulus);
  c_verify->add_option("--bound", bound);

  auto* c_search = app.add_subcommand("search", "bounded-height point search on the model");
  c_search->add_option("--curve", curve_s)->required();
  c_search->add_option("--sign", sign_s);
  c_search->add_option("--height", height);
  c_search->add_option("--matrix", matrix_s);

  auto* c_local = app.add_subcommand("local", "bounded-depth local solubility at a prime");
  c_local->add_option("--curve", curve_s)->required();
  c_local->add_option("--sign", sign_s);
  c_local->add_option("-p,--prime", prime);
  c_local->add_option("--depth", depth);

  auto* c_surface = app.add_subcommand("surface", "the parametrising elliptic surface over Q(T)");
  c_surface->add_option("--sign", sign_s);
  c_surface->add_option("--specialize", specialize_s);
  c_surface->add_option("--multiples", multiples);

  auto* c_paper = app.add_subcommand("verify-paper", "run every identity check and example");
  c_paper->add_option("--skip", skips);
  c_paper->add_option("--json", json_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_model) {
      auto [a, b] = curve_ab(parse_curve(curve_s));
      auto m = twisted_model(a, b, parse_sign(sign_s));
      emit(json{{"schema", 1},
                {"sign", sign_s},
                {"a", to_string(a)},
                {"b", to_string(b)},
                {"variables", m.F1.vars()},
                {"F1", m.F1.to_string()},
                {"F2", m.F2.to_string()}});
    } else if (*c_forget) {
      auto [a, b] = curve_ab(parse_curve(curve_s));
      Sign sign = parse_sign(sign_s);
      auto p = parse_rat_list(point_s, 4, "point");
      auto hp = forget9(a, b, p, sign);
      auto out = nine_congruent_curve(a, b, p, sign);
      emit(json{{"schema", 1},
                {"r", hp.r.get_str()},
                {"s", hp.s.get_str()},
                {"congruent_curve", curve_json(out)},
                {"type", std::string("9-congruence, ") + sign_s + " by construction"}});
    } else if (*c_verify) {
      auto rep = verify_congruence(parse_curve(e1_s), parse_curve(e2_s), modulus, bound);
      json rows = json::array();
      for (const auto& r : rep.rows)
        rows.push_back(json{{"p", r.p}, {"ap1", r.ap1}, {"ap2", r.ap2}, {"congruent", r.congruent}});
      json j{{"schema", 1},
             {"modulus", rep.modulus},
             {"bound", rep.bound},
             {"rows", rows},
             {"skipped", rep.skipped},
             {"all_congruent", rep.all_congruent},
             {"vacuous", rep.vacuous}};
      if (rep.isogeny_excluded) j["isogeny_excluded"] = *rep.isogeny_excluded;
      emit(j);
    } else if (*c_search) {
      auto [a, b] = curve_ab(parse_curve(curve_s));
      auto m = twisted_model(a, b, parse_sign(sign_s));
      if (!matrix_s.empty()) {
        auto flat = parse_rat_list(matrix_s, 16, "matrix");
        std::vector<std::vector<Rat>> mat(4, std::vector<Rat>(4));
        for (size_t i = 0; i < 16; ++i) mat[i / 4][i % 4] = flat[i];
        m = CubicPair<Rat>{apply_matrix(m.F1, mat, Rat(1)), apply_matrix(m.F2, mat, Rat(1))};
      }
      auto res = search_points(m, height);
      json pts = json::array();
      for (const auto& p : res.points) pts.push_back(point_json(p));
      emit(json{{"schema", 1}, {"height", res.height}, {"scanned", res.scanned}, {"points", pts}});
    } else if (*c_local) {
      auto [a0, b0] = curve_ab(parse_curve(curve_s));
      auto [a, b] = reduced_curve_pair(a0, b0);
      auto m = twisted_model(a, b, parse_sign(sign_s));
      auto rep = local_solubility(m, prime, depth);
      json j{{"schema", 1}, {"p", rep.p}, {"depth", rep.depth}, {"classes_scanned", rep.classes_scanned}};
      switch (rep.verdict) {
        case LocalVerdict::Soluble: {
          j["verdict"] = "soluble";
          json w = json::array();
          for (const auto& x : rep.witness) w.push_back(x.get_str());
          j["witness"] = w;
          break;
        }
        case LocalVerdict::NoPointsToDepth:
          j["verdict"] = "no-points-to-depth";
          j["note"] = "no Q_p-point found to depth " + std::to_string(rep.depth);
          break;
        case LocalVerdict::Undetermined:
          j["verdict"] = "undetermined";
          break;
      }
      emit(j);
    } else if (*c_surface) {
      Sign sign = parse_sign(sign_s);
      auto s = surface(sign);
      json j{{"schema", 1},
             {"sign", sign_s},
             {"a1", s.a1.to_string()},
             {"a2", s.a2.to_string()},
             {"a3", s.a3.to_string()},
             {"a4", s.a4.to_string()},
             {"a6", s.a6.to_string()},
             {"section", json::array({"0", "0"})}};
      if (!specialize_s.empty()) {
        Rat t0 = parse_rat(specialize_s);
        j["fiber"] = curve_json(specialize(s, t0));
        j["fiber_at"] = to_string(t0);
        if (multiples > 0) {
          auto rep = section_multiples(s, multiples, t0);
          json sec{{"n_max", rep.n_max},
                   {"infinite_order_certificate", rep.infinite_order_certificate}};
          if (rep.vanishing_multiple) sec["vanishing_multiple"] = *rep.vanishing_multiple;
          j["section_multiples"] = sec;
        }
      }
      emit(j);
    } else if (*c_paper) {
      std::set<std::string> skip(skips.begin(), skips.end());
      auto sum = verify_paper(skip);
      json items = json::array();
      for (const auto& item : sum.items) {
        json ji{{"name", item.name}, {"module", item.module}, {"status", item.status}};
        if (!item.detail.empty()) ji["detail"] = item.detail;
        items.push_back(ji);
        std::cerr << item.status << "  " << item.module << "/" << item.name
                  << (item.detail.empty() ? "" : "  [" + item.detail + "]") << "\n";
      }
      json j{{"schema", 1}, {"items", items}, {"all_passed", sum.all_passed()}};
      if (!json_out.empty()) {
        std::ofstream f(json_out);
        f << j.dump(2) << "\n";
      }
      emit(j);
      return sum.all_passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return 0;
}
