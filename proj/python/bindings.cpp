// pybind11 module: string-valued wrappers around the exact-arithmetic core.
// All rationals cross the boundary as decimal strings ("p/q") so callers
// never lose exactness.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ninecong/catalog.hpp"
#include "ninecong/congruence.hpp"
#include "ninecong/diophantine.hpp"
#include "ninecong/specialize.hpp"
#include "ninecong/surfaces.hpp"
#include "ninecong/verify.hpp"

namespace py = pybind11;
using namespace ninecong;

namespace {

Rat rat(const std::string& s) { return parse_rat(s); }

std::vector<Rat> rats(const std::vector<std::string>& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(rat(s));
  return out;
}

Sign sign_of(const std::string& s) {
  if (s == "direct") return Sign::direct;
  if (s == "reverse") return Sign::reverse;
  throw std::invalid_argument("sign must be 'direct' or 'reverse'");
}

Curve<Rat> curve_of(const std::vector<std::string>& a) {
  auto v = rats(a);
  if (v.size() == 2) return make_short_curve(v[0], v[1]);
  if (v.size() == 5) return make_curve(v[0], v[1], v[2], v[3], v[4]);
  throw std::invalid_argument("curve: pass [a,b] or [a1,a2,a3,a4,a6]");
}

py::list curve_list(const Curve<Rat>& e) {
  py::list out;
  for (const Rat* x : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6}) out.append(to_string(*x));
  return out;
}

// (a, b) of a y^2 = x^3 + a x + b model in the normalization the cubic
// pair models expect
std::pair<Rat, Rat> curve_ab(const Curve<Rat>& e) {
  if (is_zero(e.a1) && is_zero(e.a2) && is_zero(e.a3)) return {e.a4, e.a6};
  auto v = invariants(e);
  return {Rat(-27) * v.c4, Rat(-54) * v.c6};
}

}  // namespace

PYBIND11_MODULE(_ninecong, m) {
  m.doc() = "exact models and verification for families of 9-congruent elliptic curves";

  m.def(
      "model",
      [](const std::vector<std::string>& curve, const std::string& sign) {
        auto [a, b] = curve_ab(curve_of(curve));
        auto mo = twisted_model(a, b, sign_of(sign));
        py::dict d;
        d["a"] = to_string(a);
        d["b"] = to_string(b);
        d["variables"] = mo.F1.vars();
        d["F1"] = mo.F1.to_string();
        d["F2"] = mo.F2.to_string();
        return d;
      },
      py::arg("curve"), py::arg("sign") = "direct",
      "two cubics in P^3 cutting out the twisted level-9 model of the curve");

  m.def(
      "forget",
      [](const std::vector<std::string>& curve, const std::vector<std::string>& point,
         const std::string& sign) {
        auto [a, b] = curve_ab(curve_of(curve));
        auto P = rats(point);
        if (P.size() != 4) throw std::invalid_argument("point: need 4 coordinates");
        auto hp = forget9(a, b, P, sign_of(sign));
        py::dict d;
        d["r"] = hp.r.get_str();
        d["s"] = hp.s.get_str();
        d["congruent_curve"] = curve_list(nine_congruent_curve(a, b, P, sign_of(sign)));
        return d;
      },
      py::arg("curve"), py::arg("point"), py::arg("sign") = "direct",
      "map a point of the model to (r:s) and the 9-congruent curve it indexes");

  m.def(
      "verify_congruence",
      [](const std::vector<std::string>& e1, const std::vector<std::string>& e2, int modulus,
         uint64_t bound) {
        auto rep = verify_congruence(curve_of(e1), curve_of(e2), modulus, bound);
        py::dict d;
        d["modulus"] = rep.modulus;
        d["bound"] = rep.bound;
        py::list rows;
        for (const auto& r : rep.rows) {
          py::dict row;
          row["p"] = r.p;
          row["ap1"] = r.ap1;
          row["ap2"] = r.ap2;
          row["congruent"] = r.congruent;
          rows.append(row);
        }
        d["rows"] = rows;
        d["skipped"] = rep.skipped;
        d["all_congruent"] = rep.all_congruent;
        d["vacuous"] = rep.vacuous;
        d["isogeny_excluded"] =
            rep.isogeny_excluded ? py::cast(*rep.isogeny_excluded) : py::none();
        return d;
      },
      py::arg("e1"), py::arg("e2"), py::arg("modulus") = 9, py::arg("bound") = 1000,
      "compare traces of Frobenius modulo 3 or 9 for all good odd primes up to the bound");

  m.def(
      "search_points",
      [](const std::vector<std::string>& curve, const std::string& sign, long height) {
        auto [a, b] = curve_ab(curve_of(curve));
        auto res = search_points(twisted_model(a, b, sign_of(sign)), height);
        py::list pts;
        for (const auto& p : res.points) {
          py::list q;
          for (const auto& x : p) q.append(to_string(x));
          pts.append(q);
        }
        py::dict d;
        d["height"] = res.height;
        d["scanned"] = res.scanned;
        d["points"] = pts;
        return d;
      },
      py::arg("curve"), py::arg("sign") = "direct", py::arg("height") = 3,
      "primitive rational points of the model up to the given coordinate height");

  m.def(
      "local_solubility",
      [](const std::vector<std::string>& curve, const std::string& sign, uint64_t p, int depth) {
        auto [a0, b0] = curve_ab(curve_of(curve));
        auto [a, b] = reduced_curve_pair(a0, b0);
        auto rep = local_solubility(twisted_model(a, b, sign_of(sign)), p, depth);
        py::dict d;
        d["p"] = rep.p;
        d["depth"] = rep.depth;
        d["classes_scanned"] = rep.classes_scanned;
        if (rep.verdict == LocalVerdict::Soluble) {
          d["verdict"] = "soluble";
          py::list w;
          for (const auto& x : rep.witness) w.append(x.get_str());
          d["witness"] = w;
        } else if (rep.verdict == LocalVerdict::NoPointsToDepth) {
          d["verdict"] = "no-points-to-depth";
        } else {
          d["verdict"] = "undetermined";
        }
        return d;
      },
      py::arg("curve"), py::arg("sign") = "direct", py::arg("p") = 7, py::arg("depth") = 3,
      "bounded-depth search for Q_p-points on the (rescaled) twisted model");

  m.def(
      "surface",
      [](const std::string& sign) {
        auto s = surface(sign_of(sign));
        py::dict d;
        d["a1"] = s.a1.to_string();
        d["a2"] = s.a2.to_string();
        d["a3"] = s.a3.to_string();
        d["a4"] = s.a4.to_string();
        d["a6"] = s.a6.to_string();
        d["section"] = py::make_tuple("0", "0");
        return d;
      },
      py::arg("sign") = "direct",
      "long Weierstrass coefficients over Q(T) of the parametrising elliptic surface");

  m.def(
      "surface_fiber",
      [](const std::string& sign, const std::string& t0) {
        return curve_list(specialize(surface(sign_of(sign)), rat(t0)));
      },
      py::arg("sign"), py::arg("t0"), "specialize the surface at T = t0");

  m.def(
      "j_invariant",
      [](const std::vector<std::string>& curve) { return to_string(j_invariant(curve_of(curve))); },
      py::arg("curve"));

  m.def(
      "verify_paper",
      [](const std::vector<std::string>& skip) {
        auto sum = verify_paper(std::set<std::string>(skip.begin(), skip.end()));
        py::list items;
        for (const auto& item : sum.items) {
          py::dict d;
          d["name"] = item.name;
          d["module"] = item.module;
          d["status"] = item.status;
          d["detail"] = item.detail;
          items.append(d);
        }
        py::dict d;
        d["items"] = items;
        d["all_passed"] = sum.all_passed();
        return d;
      },
      py::arg("skip") = std::vector<std::string>{},
      "run every symbolic identity check, surface check and worked example");

  m.def("case_ids", [] { return all_case_ids(); },
        "identifiers of the catalogued worked examples");

  m.def(
      "reproduce",
      [](const std::string& id) {
        auto rep = reproduce(id);
        py::list stages;
        for (const auto& st : rep.stages) {
          py::dict d;
          d["stage"] = st.stage;
          d["ok"] = st.ok;
          d["detail"] = st.detail;
          stages.append(d);
        }
        py::dict d;
        d["id"] = rep.id;
        d["stages"] = stages;
        d["ok"] = rep.ok();
        return d;
      },
      py::arg("case_id"), "re-run one catalogued example end to end");
}
