#include "fibra/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <sstream>

#include "fibra/bounds.hpp"
#include "fibra/doublecover.hpp"

namespace fibra {

namespace {

std::optional<FE> coord_value(const std::string& text, const FieldPtr& K) {
  if (text == "inf") return std::nullopt;
  return fe_parse(text, K);
}

SurfPoint point_from_spec(const ConstructionFile::PointSpec& ps, BaseSurface base,
                          const FieldPtr& K) {
  if (base == BaseSurface::P1xP1) {
    return SurfPoint::p1xp1_xy(K, coord_value(ps.coords.at("x"), K),
                               coord_value(ps.coords.at("y"), K));
  }
  if (ps.coords.count("X")) {
    return SurfPoint::p2(K, fe_parse(ps.coords.at("X"), K), fe_parse(ps.coords.at("Y"), K),
                         fe_parse(ps.coords.at("Z"), K));
  }
  return SurfPoint::p2_affine(K, fe_parse(ps.coords.at("x"), K),
                              fe_parse(ps.coords.at("y"), K));
}

struct BuiltData {
  FieldPtr K;
  std::map<std::string, Form> curves;  // named curves incl. the pencil member
  Arrangement branch;
  std::vector<std::pair<std::string, SurfPoint>> points;
};

Form build_curve(const ConstructionFile::CurveSpec& cs, BaseSurface base, const FieldPtr& K) {
  if (cs.is_fiber) {
    std::optional<FE> at = coord_value(cs.fiber_at, K);
    return Form::fiber(K, cs.fiber_axis, at);
  }
  return Form::parse(cs.expr, base, K, cs.da, cs.db);
}

// Interpolation conditions carried by a divisor class D = tau* A - sum m_i e_i:
// one condition cluster per root point with its depth-1 children.
std::vector<PointCondition> class_conditions(const LatPtr& lat, const DivClass& D) {
  std::vector<PointCondition> conds;
  std::map<int, size_t> by_slot;  // root slot -> index into conds
  int br = lat->base_rank();
  for (size_t i = 0; i < lat->slots().size(); ++i) {
    const auto& slot = lat->slots()[i];
    long m = -D.v[br + i];
    if (m < 0) fail(ErrCode::InvalidInput, "positive exceptional coefficient in h0 class");
    if (slot.level == 0) {
      PointCondition pc{slot.point, (int)m};
      by_slot[(int)i] = conds.size();
      conds.push_back(pc);
    } else if (slot.level == 1) {
      if (m == 0) continue;
      int parent = slot.parent;
      if (parent < 0 || !by_slot.count(parent))
        fail(ErrCode::InvalidInput, "orphan infinitely-near condition");
      PointCondition& pc = conds[by_slot[parent]];
      if (pc.has_child) fail(ErrCode::UnsupportedDepth, "multiple children on one root");
      pc.has_child = true;
      pc.d0 = slot.point.inf_data().d0;
      pc.d1 = slot.point.inf_data().d1;
      pc.child_mult = (int)m;
    } else {
      if (m != 0)
        fail(ErrCode::UnsupportedDepth, "interpolation condition at depth > 1");
    }
  }
  std::vector<PointCondition> out;
  for (auto& pc : conds)
    if (pc.mult > 0 || pc.has_child) out.push_back(pc);
  return out;
}

DivClass class_from_spec(const LatPtr& lat, const ConstructionFile::ClassSpec& spec) {
  DivClass c = lat->base_rank() == 2
                   ? lat->base_class(spec.base.at(0), spec.base.at(1))
                   : lat->base_class(spec.base.at(0));
  for (auto& [name, coeff] : spec.exc) {
    int s = lat->find_slot(name);
    if (s < 0) fail(ErrCode::InvalidInput, "class references unknown slot " + name);
    c = c + lat->exc(s) * coeff;
  }
  return c;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void run_standard(const ConstructionFile& f, ConstructionReport& rep) {
  // ---- parse stage ----
  BuiltData data;
  data.K = NumberField::make(f.min_poly);
  for (auto& cs : f.curves) data.curves.emplace(cs.name, build_curve(cs, f.base, data.K));
  if (f.pencil_member) {
    const auto& pm = *f.pencil_member;
    Form acc;
    bool first = true;
    for (auto& term : pm.terms) {
      Form prod = data.curves.at(term.factors.front());
      for (size_t i = 1; i < term.factors.size(); ++i)
        prod = prod.multiply(data.curves.at(term.factors[i]));
      prod = prod.scale(fe_parse(term.coeff, data.K));
      if (prod.deg_a() != pm.da || prod.deg_b() != pm.db)
        fail(ErrCode::DegreeOverflow, "pencil member term degree mismatch");
      acc = first ? prod : acc.add(prod);
      first = false;
    }
    data.curves.emplace(pm.name, acc);
  }
  data.branch.base = f.base;
  data.branch.K = data.K;
  for (auto& name : f.branch)
    data.branch.components.push_back({name, data.curves.at(name), 1});
  for (auto& ps : f.points)
    data.points.push_back({ps.name, point_from_spec(ps, f.base, data.K)});
  rep.stage("parse", true,
            std::to_string(data.curves.size()) + " curves, field degree " +
                std::to_string(data.K->degree()));
  rep.values["singular_points"] = (long)data.points.size();

  // ---- branch class = 2 * delta ----
  auto base_lat = Lattice::make(f.base, data.K);
  DivClass delta0 = f.base == BaseSurface::P1xP1
                        ? base_lat->base_class(f.delta_class.at(0), f.delta_class.at(1))
                        : base_lat->base_class(f.delta_class.at(0));
  DivClass branch0 =
      base_lat->base_class(data.branch.class_a(), data.branch.class_b());
  bool delta_ok = branch0 == delta0 * 2;
  rep.stage("branch_class_is_2delta", delta_ok,
            "R ~ " + branch0.str() + ", delta = " + delta0.str());
  if (!delta_ok) return;

  // ---- reducedness ----
  try {
    data.branch.check_pairwise_coprime();
    bool sf = true;
    std::string bad;
    for (auto& c : data.branch.components)
      if (!c.curve.is_squarefree()) {
        sf = false;
        bad = c.name;
        break;
      }
    rep.stage("branch_reduced", sf, sf ? "pairwise coprime, squarefree" : bad);
    if (!sf) return;
  } catch (const Error& e) {
    rep.stage("branch_reduced", false, e.what());
    return;
  }

  // ---- claimed multiplicities ----
  {
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < f.points.size(); ++i) {
      int m = arrangement_mult_at(data.branch, data.points[i].second);
      if (m != f.points[i].mult) {
        ok = false;
        detail += f.points[i].name + ": computed " + std::to_string(m) + " expected " +
                  std::to_string(f.points[i].mult) + "; ";
      }
    }
    rep.stage("point_multiplicities", ok, detail);
    if (!ok) return;
  }

  // ---- complete singular locus ----
  try {
    std::vector<SurfPoint> pts;
    for (auto& [n, p] : data.points) pts.push_back(p);
    LocusCert cert = singular_locus_certify(data.branch, pts);
    rep.stage("singular_locus_complete", cert.ok, join(cert.notes, "; "));
  } catch (const Error& e) {
    rep.stage("singular_locus_complete", false, e.what());
    return;
  }

  // ---- classification ----
  std::map<std::string, SingularPointRecord> records;
  {
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < f.points.size(); ++i) {
      SingularPointRecord rec = classify_singularity(data.branch, data.points[i].second);
      records[f.points[i].name] = rec;
      if (!f.points[i].type.empty() && sing_type_name(rec.type) != f.points[i].type) {
        ok = false;
        detail += f.points[i].name + ": computed " + sing_type_name(rec.type) +
                  (rec.type_detail.empty() ? "" : " (" + rec.type_detail + ")") +
                  " vs claimed " + f.points[i].type + "; ";
      }
    }
    rep.stage("singularity_types", ok, detail);
  }

  // ---- strict transform smoothness (single-blow-up case) ----
  {
    bool all_ordinary = true;
    for (auto& [n, rec] : records)
      if (rec.type != SingType::OrdinaryDouble && rec.type != SingType::OrdinaryQuadruple)
        all_ordinary = false;
    if (all_ordinary) {
      std::vector<SurfPoint> pts;
      for (auto& [n, p] : data.points) pts.push_back(p);
      std::string diag;
      bool ok = strict_transform_smooth_after_blowup(data.branch, pts, &diag);
      rep.stage("strict_transform_smooth", ok, diag);
      if (!ok) return;
    }
  }

  // ---- even resolution ----
  CoverData cover;
  try {
    auto sorted = data.points;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    cover = even_resolution(data.branch, delta0, sorted);
    std::ostringstream os;
    for (auto& s : cover.log)
      os << s.label << "(m=" << s.mult << ",-" << s.subtracted << ") ";
    rep.stage("even_resolution", cover.branch_smooth, os.str());
    rep.values["resolution_steps"] = (long)cover.log.size();
  } catch (const Error& e) {
    rep.stage("even_resolution", false, e.what());
    return;
  }

  // ---- cover invariants ----
  CoverInvariants inv;
  try {
    DivClass kd = cover.lat->canonical() + cover.delta;
    long h0 = h0_interpolation(f.base, data.K, /*da*/
                               (int)kd.v[0],
                               f.base == BaseSurface::P1xP1 ? (int)kd.v[1] : 0,
                               class_conditions(cover.lat, kd));
    inv = smooth_cover_invariants(1, cover.lat->canonical(), cover.delta, 0, h0,
                                  cover.branch_smooth);
    rep.values["chi_S"] = inv.chi;
    rep.values["pg_S"] = inv.pg;
    rep.values["q_S"] = inv.q;
    rep.values["K2_S_tilde"] = inv.K2;
    rep.stage("cover_invariants", true,
              "chi=" + std::to_string(inv.chi) + " K2~=" + std::to_string(inv.K2) +
                  " pg=" + std::to_string(inv.pg) + " q=" + std::to_string(inv.q));
  } catch (const Error& e) {
    rep.stage("cover_invariants", false, e.what());
    return;
  }

  // ---- contractions ----
  std::vector<DivClass> contracted;
  try {
    if (f.contractions.kind == "branch_components") {
      for (auto& name : f.contractions.names) {
        const Form& curve = data.curves.at(name);
        DivClass c = cover.lat->base_class(curve.deg_a(), curve.deg_b());
        for (size_t i = 0; i < cover.lat->slots().size(); ++i) {
          const auto& slot = cover.lat->slots()[i];
          int m = mult_at(curve, slot.point);
          if (m > 0) c = c - cover.lat->exc((int)i) * m;
        }
        contracted.push_back(c);
      }
    } else if (f.contractions.kind == "exceptional") {
      for (auto& [label, cls] : cover.branch_exceptionals)
        if (cls.self() == -2) contracted.push_back(cls);
    } else {
      fail(ErrCode::InvalidInput, "unknown contraction kind " + f.contractions.kind);
    }
    bool ok = true;
    std::string detail;
    for (auto& c : contracted) {
      if (c.self() != -2) {
        ok = false;
        detail += c.str() + " has self-intersection " + std::to_string(c.self()) + "; ";
      } else if (branch_component_halving(c.self()) != -1) {
        ok = false;
      }
    }
    for (size_t i = 0; ok && i < contracted.size(); ++i)
      for (size_t j = i + 1; j < contracted.size(); ++j)
        if (contracted[i].dot(contracted[j]) != 0) {
          ok = false;
          detail += "contractions meet; ";
        }
    inv = contract_minus_one(inv, (long)contracted.size());
    rep.values["contractions"] = (long)contracted.size();
    rep.values["K2_S"] = inv.K2_minimal;
    rep.stage("contractions", ok, std::to_string(contracted.size()) + " (-1)-curves");
    if (!ok) return;
  } catch (const Error& e) {
    rep.stage("contractions", false, e.what());
    return;
  }

  // ---- fibration datum H ----
  SurfacePair pair;
  try {
    DivClass H = class_from_spec(cover.lat, f.fibration);
    for (auto& c : contracted)
      if (c.dot(H) != 0)
        fail(ErrCode::InvalidInput, "a contracted curve meets the fiber class");
    DivClass kd = cover.lat->canonical() + cover.delta;
    pair.K2_S = inv.K2_minimal;
    pair.chi_S = inv.chi;
    pair.pg_S = inv.pg;
    pair.q_S = inv.q;
    pair.H_self = 2 * H.self();
    pair.KH = 2 * kd.dot(H);
    if ((pair.H_self + pair.KH) % 2 != 0) fail(ErrCode::InvalidInput, "odd 2g-2 for H");
    pair.g_H = (pair.H_self + pair.KH) / 2 + 1;
    rep.values["g_H"] = pair.g_H;
    auto lemma = check_genus_two_pencil(pair);
    pair.d = lemma.d;
    rep.values["d"] = pair.d;
    rep.values["h0_K_plus_H"] = lemma.h0_K_plus_H;
    rep.stage("genus2_pencil", true,
              "g(H)=2, h0(K+H)=2, d=2" +
                  std::string(lemma.g_C_hat_at_least_3 ? ", g(C-hat)>=3 expected" : ""));
  } catch (const Error& e) {
    rep.stage("genus2_pencil", false, e.what());
    return;
  }

  // ---- the moving pencil C-hat ----
  try {
    DivClass P = class_from_spec(cover.lat, f.pencil);
    long pa = cover.lat->adjunction_genus(P);
    if (pa != 0) fail(ErrCode::InvalidInput, "pencil base curve has genus " + std::to_string(pa));
    long r = P.dot(cover.branch);
    rep.values["pencil_branch_points"] = r;
    long g = hurwitz_double_cover_genus(0, r);
    pair.g_C_hat = g;
    rep.values["g_C_hat"] = g;
    long dim = h0_interpolation(f.base, data.K, (int)P.v[0],
                                f.base == BaseSurface::P1xP1 ? (int)P.v[1] : 0,
                                class_conditions(cover.lat, P));
    rep.values["pencil_system_dim"] = dim;
    long base_pts = pair.K2_S + 2 * pair.KH + pair.H_self;
    rep.values["base_points"] = base_pts;
    rep.stage("pencil", true,
              "branch points " + std::to_string(r) + ", g(C-hat) = " + std::to_string(g) +
                  ", system dim " + std::to_string(dim));
  } catch (const Error& e) {
    rep.stage("pencil", false, e.what());
    return;
  }

  // ---- threefold outputs ----
  try {
    ThreefoldReport std_out = standard_construction(pair);
    rep.values["pg_F"] = std_out.pg_F;
    rep.values["pg_X"] = std_out.pg_X;
    rep.values["K3_X"] = std_out.K3_X;
    rep.values["chi_omega_X"] = std_out.chi_omega_X;
    bool my = bounds::miyaoka_yau_check(Rat(std_out.K3_X), Rat(std_out.chi_omega_X));
    rep.values["g_F_variant"] = variant_construction(pair, 3).g_F;
    rep.stage("threefold", my,
              "pg(F)=" + std::to_string(std_out.pg_F) + " K3=" + std::to_string(std_out.K3_X) +
                  " chi(omega)=" + std::to_string(std_out.chi_omega_X) +
                  (my ? " (Miyaoka-Yau ok)" : " (Miyaoka-Yau violated)"));
  } catch (const Error& e) {
    rep.stage("threefold", false, e.what());
  }
}

void run_literature(const ConstructionFile& f, ConstructionReport& rep) {
  SurfacePair pair;
  pair.K2_S = f.lit_K2;
  pair.chi_S = f.lit_chi;
  pair.pg_S = f.lit_pg;
  pair.q_S = f.lit_q;
  pair.H_self = f.lit_H_self;
  pair.KH = f.lit_KH;
  pair.g_H = f.lit_g_H;
  pair.g_C_hat = f.lit_g_C_hat;
  pair.d = f.lit_d;
  pair.provenance = f.provenance;
  rep.stage("literature_input", true, f.provenance);
  rep.values["K2_S"] = pair.K2_S;
  rep.values["chi_S"] = pair.chi_S;
  rep.values["pg_S"] = pair.pg_S;
  rep.values["q_S"] = pair.q_S;
  rep.values["g_C_hat"] = pair.g_C_hat;
  rep.values["d"] = pair.d;
  if (pair.g_H == 2) {
    auto lemma = check_genus_two_pencil(pair);
    rep.stage("genus2_pencil", true, "h0(K+H) = " + std::to_string(lemma.h0_K_plus_H));
  }
  ThreefoldReport std_out = standard_construction(pair);
  rep.values["pg_F"] = std_out.pg_F;
  rep.values["pg_X"] = std_out.pg_X;
  rep.values["K3_X"] = std_out.K3_X;
  rep.values["chi_omega_X"] = std_out.chi_omega_X;
  rep.values["g_F_variant"] = variant_construction(pair, 3).g_F;
  bool my = bounds::miyaoka_yau_check(Rat(std_out.K3_X), Rat(std_out.chi_omega_X));
  rep.stage("threefold", my, "pg(F)=" + std::to_string(std_out.pg_F));
}

void run_variant(const ConstructionFile& f, const std::string& dir, ConstructionReport& rep) {
  namespace fs = std::filesystem;
  std::string sib_path = (fs::path(dir) / (f.sibling + ".json")).string();
  ConstructionFile sib = load_construction(sib_path);
  ConstructionReport sib_rep = verify_construction(sib, dir);
  // The variant consumes the sibling's computed surface datum; the sibling's
  // own expected-block verdict is reported in its own report.
  SurfacePair pair = assemble_surface_pair(sib_rep);
  rep.stage("sibling", true,
            f.sibling + " computation complete" +
                (sib_rep.pass ? "" : " (sibling report itself fails at " +
                                         sib_rep.first_failure + ")"));
  ThreefoldReport var = variant_construction(pair, f.nu);
  rep.values["g_F"] = var.g_F;
  rep.values["pg_X_at_nu"] = var.pg_X;
  rep.values["nu"] = f.nu;
  // the family is unbounded in nu: strictly increasing pg_X
  bool mono = true;
  long prev = 0;
  for (long nu = 3; nu <= 10; ++nu) {
    long cur = variant_construction(pair, nu).pg_X;
    if (nu > 3 && cur <= prev) mono = false;
    prev = cur;
  }
  rep.stage("variant", mono,
            "g(F) = " + std::to_string(var.g_F) + ", pg(X) = 2(nu-1) increasing");
}

}  // namespace

SurfacePair assemble_surface_pair(const ConstructionReport& rep) {
  auto need = [&](const std::string& k) -> long {
    auto it = rep.values.find(k);
    if (it == rep.values.end())
      fail(ErrCode::IncompleteReport, "report lacks " + k);
    return it->second;
  };
  SurfacePair p;
  p.K2_S = need("K2_S");
  p.chi_S = need("chi_S");
  p.pg_S = need("pg_S");
  p.q_S = need("q_S");
  p.g_C_hat = need("g_C_hat");
  p.d = need("d");
  if (rep.values.count("g_H")) {
    p.g_H = rep.values.at("g_H");
    p.H_self = 0;
    p.KH = 2;
  } else {
    p.g_H = 2;
    p.H_self = 0;
    p.KH = 2;
  }
  p.provenance = "report:" + rep.id;
  return p;
}

ConstructionReport verify_construction(const ConstructionFile& f, const std::string& dir) {
  ConstructionReport rep;
  rep.id = f.id;
  rep.kind = f.kind;
  for (auto& a : f.assertions) rep.assertions.push_back(a);
  try {
    if (f.kind == "standard") run_standard(f, rep);
    else if (f.kind == "variant") run_variant(f, dir, rep);
    else if (f.kind == "literature") run_literature(f, rep);
    else fail(ErrCode::ParseError, "unknown kind");
  } catch (const Error& e) {
    rep.stage("pipeline", false, e.what());
  }
  // expected-block comparison
  for (auto& [key, want] : f.expected) {
    CheckResult c;
    c.key = key;
    c.expected = std::to_string(want);
    auto it = rep.values.find(key);
    if (it == rep.values.end()) {
      c.computed = "(missing)";
      c.pass = false;
    } else {
      c.computed = std::to_string(it->second);
      c.pass = it->second == want;
    }
    rep.checks.push_back(c);
  }
  rep.finalize();
  return rep;
}

ConstructionReport verify_file(const std::string& path) {
  namespace fs = std::filesystem;
  ConstructionFile f = load_construction(path);
  return verify_construction(f, fs::path(path).parent_path().string());
}

CorpusSummary corpus_run(const std::string& dir, bool parallel) {
  namespace fs = std::filesystem;
  CorpusSummary sum;
  std::vector<std::string> present;
  for (auto& id : corpus_order()) {
    if (fs::exists(fs::path(dir) / (id + ".json"))) present.push_back(id);
    else sum.missing.push_back(id);
  }
  auto one = [&](const std::string& id) -> CorpusRow {
    ConstructionReport rep = verify_file((fs::path(dir) / (id + ".json")).string());
    CorpusRow row;
    row.id = id;
    row.kind = rep.kind;
    row.headline = rep.values.count("pg_F") ? rep.values.at("pg_F")
                   : rep.values.count("g_F") ? rep.values.at("g_F")
                                             : 0;
    row.pass = rep.pass;
    row.first_failure = rep.first_failure;
    return row;
  };
  if (parallel) {
    std::vector<std::future<CorpusRow>> futs;
    for (auto& id : present)
      futs.push_back(std::async(std::launch::async, one, id));
    for (auto& f : futs) sum.rows.push_back(f.get());
  } else {
    for (auto& id : present) sum.rows.push_back(one(id));
  }
  sum.total = (int)sum.rows.size();
  for (auto& r : sum.rows)
    if (r.pass) ++sum.passed;
  return sum;
}

bool verify_class_identity(const DivClass& lhs, const DivClass& rhs) {
  if (!lhs.lat || !rhs.lat) fail(ErrCode::LatticeMismatch, "classes without lattices");
  if (lhs.v.size() != rhs.v.size()) fail(ErrCode::LatticeMismatch, "different lattice ranks");
  return lhs == rhs;
}

}  // namespace fibra
