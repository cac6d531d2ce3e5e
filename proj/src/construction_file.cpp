#include "fibra/construction_file.hpp"

#include <filesystem>
#include <fstream>

#include "fibra/expr.hpp"

namespace fibra {

using nlohmann::json;

FE fe_parse(const std::string& text, const FieldPtr& K) {
  BiPoly p = parse_affine_expr(text, K);
  if (p.deg_x() > 0 || p.deg_y() > 0)
    fail(ErrCode::ParseError, "expected a field constant, got \"" + text + "\"");
  return p.coeff(0, 0);
}

namespace {

std::vector<long> long_vec(const json& j) {
  std::vector<long> v;
  for (auto& x : j) v.push_back(x.get<long>());
  return v;
}

ConstructionFile::ClassSpec class_spec(const json& j) {
  ConstructionFile::ClassSpec c;
  if (j.contains("base")) c.base = long_vec(j.at("base"));
  if (j.contains("exc"))
    for (auto& [k, v] : j.at("exc").items()) c.exc[k] = v.get<long>();
  return c;
}

}  // namespace

ConstructionFile parse_construction(const json& j) {
  ConstructionFile f;
  if (j.value("schema", "") != "fibra-construction/1")
    fail(ErrCode::ParseError, "unknown construction schema");
  f.id = j.at("id").get<std::string>();
  f.source_example = j.value("source_example", "");
  f.kind = j.at("kind").get<std::string>();
  f.title = j.value("title", "");
  for (auto& a : j.value("assertions", json::array()))
    f.assertions.push_back(a.get<std::string>());
  if (j.contains("expected"))
    for (auto& [k, v] : j.at("expected").items())
      if (v.is_number_integer()) f.expected[k] = v.get<long>();

  if (f.kind == "variant") {
    f.sibling = j.at("sibling").get<std::string>();
    f.nu = j.value("nu", 3);
    return f;
  }
  if (f.kind == "literature") {
    const json& s = j.at("surface");
    f.lit_K2 = s.at("K2_S").get<long>();
    f.lit_chi = s.value("chi_S", 1);
    f.lit_pg = s.value("pg_S", 0);
    f.lit_q = s.value("q_S", 0);
    const json& p = j.at("pencil");
    f.lit_g_C_hat = p.at("g_C_hat").get<long>();
    f.lit_d = p.at("d").get<long>();
    f.lit_H_self = p.value("H_self", 0);
    f.lit_KH = p.value("KH", 0);
    f.lit_g_H = p.value("g_H", 0);
    f.provenance = j.value("provenance", "");
    return f;
  }
  if (f.kind != "standard") fail(ErrCode::ParseError, "unknown kind " + f.kind);

  std::vector<Rat> mp;
  for (auto& c : j.at("field").at("min_poly")) {
    if (c.is_number_integer()) mp.push_back(Rat(c.get<long>()));
    else {
      // rational coefficient in "p/q" string form
      std::string s = c.get<std::string>();
      auto slash = s.find('/');
      if (slash == std::string::npos) mp.push_back(Rat(mpz_class(s)));
      else {
        Rat r(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
        r.canonicalize();
        mp.push_back(r);
      }
    }
  }
  f.min_poly = RatPoly(std::move(mp));
  std::string b = j.at("base").get<std::string>();
  if (b == "P1xP1") f.base = BaseSurface::P1xP1;
  else if (b == "P2") f.base = BaseSurface::P2;
  else fail(ErrCode::ParseError, "unknown base surface " + b);

  for (auto& c : j.at("curves")) {
    ConstructionFile::CurveSpec cs;
    cs.name = c.at("name").get<std::string>();
    if (c.contains("fiber")) {
      cs.is_fiber = true;
      std::string axis = c.at("fiber").value("axis", "x");
      cs.fiber_axis = axis == "x" ? 0 : 1;
      cs.fiber_at = c.at("fiber").at("at").get<std::string>();
      cs.da = cs.fiber_axis == 0 ? 1 : 0;
      cs.db = 1 - cs.da;
    } else {
      cs.expr = c.at("expr").get<std::string>();
      if (f.base == BaseSurface::P1xP1) {
        auto bd = long_vec(c.at("bidegree"));
        cs.da = (int)bd[0];
        cs.db = (int)bd[1];
      } else {
        cs.da = c.at("degree").get<int>();
        cs.db = 0;
      }
    }
    f.curves.push_back(std::move(cs));
  }
  if (j.contains("pencil_member")) {
    const json& pm = j.at("pencil_member");
    ConstructionFile::PencilMemberSpec ps;
    ps.name = pm.at("name").get<std::string>();
    if (f.base == BaseSurface::P1xP1) {
      auto bd = long_vec(pm.at("bidegree"));
      ps.da = (int)bd[0];
      ps.db = (int)bd[1];
    } else {
      ps.da = pm.at("degree").get<int>();
    }
    for (auto& t : pm.at("combination")) {
      ConstructionFile::PencilMemberSpec::Term term;
      term.coeff = t.at("coeff").is_string() ? t.at("coeff").get<std::string>()
                                             : std::to_string(t.at("coeff").get<long>());
      for (auto& n : t.at("curves")) term.factors.push_back(n.get<std::string>());
      ps.terms.push_back(std::move(term));
    }
    f.pencil_member = std::move(ps);
  }
  for (auto& n : j.at("branch")) f.branch.push_back(n.get<std::string>());
  f.delta_class = long_vec(j.at("delta"));
  for (auto& p : j.at("singular_points")) {
    ConstructionFile::PointSpec ps;
    ps.name = p.at("name").get<std::string>();
    for (auto& key : {"x", "y", "X", "Y", "Z"})
      if (p.contains(key)) ps.coords[key] = p.at(key).is_string()
                                                ? p.at(key).get<std::string>()
                                                : std::to_string(p.at(key).get<long>());
    ps.mult = p.at("mult").get<int>();
    ps.type = p.value("type", "");
    f.points.push_back(std::move(ps));
  }
  f.fibration = class_spec(j.at("fibration"));
  f.pencil = class_spec(j.at("pencil_of_interest"));
  const json& ct = j.at("contractions");
  f.contractions.kind = ct.at("kind").get<std::string>();
  for (auto& n : ct.value("names", json::array()))
    f.contractions.names.push_back(n.get<std::string>());
  return f;
}

ConstructionFile load_construction(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrCode::InvalidInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  return parse_construction(j);
}

std::string corpus_dir() {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv("FIBRA_CORPUS_DIR")) return env;
  for (const char* cand : {"corpus", "../corpus"})
    if (fs::exists(fs::path(cand) / "x_s_19.json")) return cand;
#ifdef FIBRA_SOURCE_CORPUS_DIR
  return FIBRA_SOURCE_CORPUS_DIR;
#else
  return "corpus";
#endif
}

const std::vector<std::string>& corpus_order() {
  static const std::vector<std::string> order = {
      "x_s_19", "x_c_nu_13", "y_s_19", "y_c_nu_13", "z_s_19",
      "z_c_nu_13", "x_s_16", "x_c_nu_11", "x_s_13", "x_c_nu_9"};
  return order;
}

}  // namespace fibra
