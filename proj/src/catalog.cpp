#include "ninecong/catalog.hpp"

namespace ninecong {
namespace {

Rat R(const char* s) { return parse_rat(s); }

Curve<Rat> curve(const char* a1, const char* a2, const char* a3, const char* a4, const char* a6) {
  return Curve<Rat>{R(a1), R(a2), R(a3), R(a4), R(a6)};
}

// ascending coefficients: p(T) = c0 + c1 T + ...
UPoly up(std::initializer_list<const char*> asc) {
  std::vector<Rat> c;
  for (const char* s : asc) c.push_back(R(s));
  return UPoly(std::move(c));
}

std::vector<std::vector<Rat>> mat4(std::initializer_list<const char*> entries) {
  std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4));
  size_t k = 0;
  for (const char* s : entries) {
    m[k / 4][k % 4] = R(s);
    ++k;
  }
  return m;
}

std::vector<Rat> pt4(const char* x, const char* y, const char* z, const char* t) {
  return {R(x), R(y), R(z), R(t)};
}

}  // namespace

const std::vector<TwistedExampleCase>& twisted_example_cases() {
  static const std::vector<TwistedExampleCase> cases = [] {
    std::vector<TwistedExampleCase> v;

    TwistedExampleCase c1;
    c1.id = "ex-47775-direct";
    c1.sign = Sign::direct;
    c1.base_label = "47775z1";
    c1.base_curve = curve("0", "-1", "1", "-32013", "2215478");
    c1.a = R("-41489280");
    c1.b = R("102867483600");
    c1.matrix = mat4({"2520473760", "937149484320", "-1998984627360", "-152410870080",
                      "0", "79644600", "-185343480", "-3827880",
                      "0", "-22932", "47040", "6468",
                      "0", "-6", "13", "1"});
    c1.search_height = 5;
    c1.points = {pt4("1", "0", "0", "0"), pt4("4", "-1", "-1", "0"), pt4("1", "2", "-1", "0")};
    c1.labels = {"47775z1", "429975*", "494901225*"};
    c1.expected = {curve("0", "-1", "1", "-32013", "2215478"),
                   curve("0", "0", "1", "-314688780", "-2148671872069"),
                   curve("0", "0", "1", "-23634650164230", "-21037908383222056594")};
    v.push_back(c1);

    TwistedExampleCase c2;
    c2.id = "ex-201-reverse";
    c2.sign = Sign::reverse;
    c2.base_label = "201c1";
    // equations for 201c1 itself are not printed; its y^2 = x^3 + a x + b model
    // stands in (isomorphic via u = 6 to the model with invariants (c4, c6))
    c2.base_curve = curve("0", "0", "0", "-1029699", "402173694");
    c2.a = R("-1029699");
    c2.b = R("402173694");
    c2.matrix = mat4({"-26471709", "-23136696", "20106774", "-20376135",
                      "-45147", "-39828", "33990", "-34509",
                      "90294", "79332", "-68304", "69342",
                      "77", "68", "-58", "59"});
    c2.search_height = 3;
    c2.points = {pt4("1", "-2", "-1", "0")};
    c2.labels = {"374865*"};
    c2.expected = {curve("1", "1", "0", "-60068738107", "4858035498982726")};
    v.push_back(c2);

    return v;
  }();
  return cases;
}

const std::vector<TripleCase>& triple_cases() {
  static const std::vector<TripleCase> cases = [] {
    std::vector<TripleCase> v;
    v.push_back(TripleCase{
        "triple-4650",
        Sign::direct,
        {"4650j1", "553350*", "1966950*"},
        {curve("1", "1", "0", "-2700", "54000"),
         curve("1", "1", "0", "-10472207700", "-455228489646000"),
         curve("1", "-1", "0", "-20654522386242", "-36130051534030639084")}});
    v.push_back(TripleCase{
        "triple-27606",
        Sign::direct,
        {"27606c1", "358878*", "1242270*"},
        {curve("1", "0", "0", "-10289707", "12703497719"),
         curve("1", "0", "0", "2940333", "-1416695391"),
         curve("1", "-1", "1", "-359912", "-322105301")}});
    return v;
  }();
  return cases;
}

const std::vector<QTCase>& qt_cases() {
  static const std::vector<QTCase> cases = [] {
    std::vector<QTCase> v;

    QTCase d;
    d.id = "ex-qt-direct";
    d.sign = Sign::direct;
    d.a = R("1/2") * up({"39", "60", "-162", "-60", "39"});
    d.b = up({"47", "-120", "21", "0", "21", "120", "47"});
    d.point = {R("15/2") * up({"3", "-8", "-2", "8", "3"}), up({"1", "0", "1"}), up({"1"}),
               UPoly()};
    d.r = up({"-47", "-78", "153", "244", "-153", "-78", "47"});
    d.s = R("18") * up({"1", "0", "1"}) * up({"-1", "6", "1"});
    d.t0 = R("0");
    d.specialized_labels = {"80640*", "5886720*"};
    v.push_back(d);

    QTCase r;
    r.id = "ex-qt-reverse";
    r.sign = Sign::reverse;
    UPoly p1 = up({"1", "3"});                  // 3T + 1
    UPoly p2 = up({"-1", "-3", "0", "6"});      // 6T^3 - 3T - 1
    UPoly p3 = up({"-4", "-9", "0", "9"});      // 9T^3 - 9T - 4
    r.a = R("3") * p1 * p2 * p3 * p3;
    r.b = R("2") * up({"4", "21", "27", "3"}) * p2 * p2 * p3 * p3;
    r.point = {-(p2 * p3), UPoly::var(), up({"1"}), UPoly()};
    r.r = p1 * p3 * p2 * up({"8", "66", "216", "321", "180"});
    r.s = R("3") * up({"8", "90", "414", "1017", "1431", "1107", "369"});
    r.t0 = R("-1/4");
    r.specialized_labels = {"2304o1", "343296g1"};
    v.push_back(r);

    return v;
  }();
  return cases;
}

namespace {
template <class V>
const typename V::value_type& find_case(const V& v, const std::string& id) {
  for (const auto& c : v)
    if (c.id == id) return c;
  throw UnknownEquations(id);
}
}  // namespace

const TwistedExampleCase& twisted_example_case(const std::string& id) {
  return find_case(twisted_example_cases(), id);
}
const TripleCase& triple_case(const std::string& id) { return find_case(triple_cases(), id); }
const QTCase& qt_case(const std::string& id) { return find_case(qt_cases(), id); }

std::vector<std::string> all_case_ids() {
  std::vector<std::string> ids;
  for (const auto& c : twisted_example_cases()) ids.push_back(c.id);
  for (const auto& c : triple_cases()) ids.push_back(c.id);
  for (const auto& c : qt_cases()) ids.push_back(c.id);
  return ids;
}

}  // namespace ninecong
