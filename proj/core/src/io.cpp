#include "parmod/io.hpp"

#include <algorithm>
#include <cctype>

#include "parmod/error.hpp"

namespace parmod {

using nlohmann::json;

namespace {

bool valid_integer_text(std::string_view t) {
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  return std::all_of(t.begin(), t.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

Int parse_integer_text(std::string_view t, std::string_view what) {
  if (!valid_integer_text(t))
    fail(errc::parse, std::string(what) + ": malformed integer '" +
                          std::string(t) + "'");
  if (!t.empty() && t[0] == '+') t.remove_prefix(1);
  return Int(std::string(t));
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    fail(errc::parse, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer())
    fail(errc::parse, std::string("field '") + key +
                          "' must be a JSON integer");
  return v.get<int>();
}

void require_schema(const json& j, const char* schema) {
  if (!j.is_object()) fail(errc::parse, "record must be a JSON object");
  const json& s = field(j, "schema");
  if (!s.is_string() || s.get<std::string>() != schema)
    fail(errc::parse, std::string("expected schema '") + schema + "'");
}

json subsets_json(const std::vector<std::vector<int>>& J) {
  json out = json::array();
  for (const auto& sub : J) out.push_back(sub);
  return out;
}

std::vector<std::vector<int>> subsets_from_json(const json& j,
                                                const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) fail(errc::parse, std::string(key) + " must be a list");
  std::vector<std::vector<int>> out;
  for (const json& sub : v) {
    if (!sub.is_array())
      fail(errc::parse, std::string(key) + " entries must be lists");
    std::vector<int> one;
    for (const json& e : sub) {
      if (!e.is_number_integer())
        fail(errc::parse, std::string(key) + " entries must hold integers");
      one.push_back(e.get<int>());
    }
    out.push_back(std::move(one));
  }
  return out;
}

json rows_json(const std::vector<std::vector<Rat>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const Rat& a : row) r.push_back(rational_to_string(a));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rat(parse_integer_text(text, "rational"));
  Int p = parse_integer_text(text.substr(0, slash), "rational numerator");
  Int q = parse_integer_text(text.substr(slash + 1), "rational denominator");
  if (q == 0) fail(errc::parse, "rational with zero denominator");
  return make_rat(p, q);
}

std::string rational_to_string(const Rat& q) {
  std::string out = num(q).str();
  if (den(q) != 1) out += "/" + den(q).str();
  return out;
}

std::string int_to_string(const Int& v) { return v.str(); }

json rational_json(const Rat& q) { return json(rational_to_string(q)); }

Rat rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_float())
    fail(errc::parse,
         "floating-point number rejected; use a \"p/q\" string");
  fail(errc::parse, "expected a rational as \"p/q\" string or integer");
}

json int_json(const Int& v) { return json(int_to_string(v)); }

Int int_from_json(const json& j) {
  if (j.is_string()) return parse_integer_text(j.get<std::string>(), "value");
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_float())
    fail(errc::parse, "floating-point number rejected; use a string");
  fail(errc::parse, "expected an integer as string or JSON number");
}

json weight_to_json(const ParabolicWeight& w) {
  json j;
  j["schema"] = "parmod/weight/1";
  j["rank"] = w.rank();
  j["points"] = w.points();
  j["rows"] = rows_json(w.rows());
  return j;
}

ParabolicWeight weight_from_json(const json& j) {
  require_schema(j, "parmod/weight/1");
  int r = int_field(j, "rank");
  int n = int_field(j, "points");
  const json& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    fail(errc::parse, "weight needs one row per marked point");
  std::vector<std::vector<Rat>> parsed(n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array()) fail(errc::parse, "weight rows must be lists");
    if (row.size() != static_cast<std::size_t>(r - 1) &&
        row.size() != static_cast<std::size_t>(r))
      fail(errc::parse, "weight rows need r-1 (or r) entries");
    for (const json& e : row) parsed[i].push_back(rational_from_json(e));
    if (parsed[i].size() == static_cast<std::size_t>(r)) {
      Rat last = parsed[i].back();
      parsed[i].pop_back();
      for (Rat& a : parsed[i]) a -= last;
    }
  }
  return ParabolicWeight::ray(r, n, std::move(parsed));
}

json divisor_to_json(const DivisorClass& D) {
  json j;
  j["schema"] = "parmod/divisor/1";
  j["rank"] = D.r;
  j["points"] = D.n;
  j["level"] = int_json(D.level);
  json lambdas = json::array();
  for (const Partition& l : D.lambdas) {
    json parts = json::array();
    for (int k = 0; k < l.length(); ++k) parts.push_back(l.part(k));
    lambdas.push_back(std::move(parts));
  }
  j["lambdas"] = std::move(lambdas);
  return j;
}

DivisorClass divisor_from_json(const json& j) {
  // Anticanonical records carry the same payload under their own tag, so
  // they are accepted anywhere a divisor class is expected.
  const json& s = field(j, "schema");
  if (!s.is_string() || (s.get<std::string>() != "parmod/divisor/1" &&
                         s.get<std::string>() != "parmod/anticanonical/1"))
    fail(errc::parse, "expected schema 'parmod/divisor/1'");
  int r = int_field(j, "rank");
  int n = int_field(j, "points");
  Int level = int_from_json(field(j, "level"));
  std::vector<std::vector<int>> raw = subsets_from_json(j, "lambdas");
  std::vector<Partition> lambdas;
  lambdas.reserve(raw.size());
  for (auto& parts : raw) lambdas.emplace_back(std::move(parts));
  return DivisorClass::make(r, n, std::move(level), std::move(lambdas));
}

json wall_to_json(const Wall& W) {
  json j;
  j["schema"] = "parmod/wall/1";
  j["rank"] = W.r;
  j["points"] = W.n;
  j["s"] = W.s;
  j["d"] = W.d;
  j["subsets"] = subsets_json(W.J);
  return j;
}

Wall wall_from_json(const json& j) {
  require_schema(j, "parmod/wall/1");
  return Wall::make(int_field(j, "rank"), int_field(j, "points"),
                    int_field(j, "s"), int_field(j, "d"),
                    subsets_from_json(j, "subsets"));
}

json certificate_to_json(const GwCertificate& c) {
  json j;
  j["schema"] = "parmod/certificate/1";
  j["s"] = c.s;
  j["d"] = c.d;
  j["subsets"] = subsets_json(c.J);
  return j;
}

GwCertificate certificate_from_json(const json& j) {
  require_schema(j, "parmod/certificate/1");
  return GwCertificate{int_field(j, "s"), int_field(j, "d"),
                       subsets_from_json(j, "subsets")};
}

json wall_groups_record(int r, int n, const std::string& kind,
                        const std::string& parameter,
                        const std::vector<WallGroup>& groups,
                        bool bounded_search) {
  json j;
  j["schema"] = "parmod/wall-list/1";
  j["rank"] = r;
  j["points"] = n;
  j["kind"] = kind;
  j["parameter"] = parameter;
  j["bounded_search"] = bounded_search;
  json gs = json::array();
  std::size_t total = 0;
  for (const WallGroup& g : groups) {
    json gj;
    gj["schema"] = "parmod/wall-group/1";
    gj["position"] = rational_json(g.position);
    gj["simple"] = g.simple();
    json walls = json::array();
    for (const Wall& W : g.walls) walls.push_back(wall_to_json(W));
    gj["walls"] = std::move(walls);
    gs.push_back(std::move(gj));
    total += g.walls.size();
  }
  j["groups"] = std::move(gs);
  j["wall_count"] = total;
  return j;
}

json effectiveness_to_json(const EffectivenessResult& e) {
  json j;
  j["schema"] = "parmod/effectiveness/1";
  j["effective"] = e.effective;
  j["bounded_search"] = e.bounded_search;
  if (e.violation) j["violation"] = certificate_to_json(*e.violation);
  return j;
}

json crossing_report_to_json(const CrossingReport& rep) {
  json j;
  j["schema"] = "parmod/crossing-report/1";
  j["wall"] = wall_to_json(rep.wall);
  j["dim_M"] = rep.dim_M;
  j["dim_Y"] = rep.dim_Y;
  j["ext_minus"] = rep.ext_minus;
  j["ext_plus"] = rep.ext_plus;
  j["dim_Y_minus"] = rep.dim_Y_minus;
  j["dim_Y_plus"] = rep.dim_Y_plus;
  j["kind"] = crossing_kind_name(rep.kind);
  j["generic_stratum"] = rep.generic_stratum;
  return j;
}

json dominance_trace_to_json(const DominanceTrace& t) {
  json j;
  j["schema"] = "parmod/dominance-trace/1";
  j["rank"] = t.r;
  j["points"] = t.n;
  j["dominant"] = t.dominant;
  j["rho_initial"] = t.rho_initial;
  j["rho_final"] = t.rho_final;
  j["bounded_search"] = t.bounded_search;
  j["ended_at_boundary"] = t.ended_at_boundary;
  json steps = json::array();
  for (const TraceStep& s : t.steps) {
    json sj;
    sj["c"] = rational_json(s.c);
    sj["report"] = crossing_report_to_json(s.report);
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  return j;
}

json cone_to_json(const ConeDescription& C) {
  json j;
  j["schema"] = "parmod/cone/1";
  j["rank"] = C.r;
  j["points"] = C.n;
  j["bounded_search"] = C.bounded_search;
  std::size_t ordering = 0, level = 0, gw = 0;
  json qs = json::array();
  for (const ConeInequality& q : C.inequalities) {
    json qj;
    qj["schema"] = "parmod/inequality/1";
    switch (q.kind) {
      case InequalityKind::ordering:
        qj["kind"] = "ordering";
        qj["point"] = q.point;
        qj["step"] = q.step;
        ++ordering;
        break;
      case InequalityKind::level:
        qj["kind"] = "level";
        qj["point"] = q.point;
        ++level;
        break;
      case InequalityKind::gw:
        qj["kind"] = "gw";
        qj["certificate"] = certificate_to_json(*q.certificate);
        ++gw;
        break;
    }
    qj["c_level"] = int_json(q.c_level);
    json rows = json::array();
    for (const auto& row : q.c_lambda) {
      json rj = json::array();
      for (const Int& c : row) rj.push_back(int_json(c));
      rows.push_back(std::move(rj));
    }
    qj["c_lambda"] = std::move(rows);
    qs.push_back(std::move(qj));
  }
  j["inequalities"] = std::move(qs);
  j["counts"] = {{"ordering", ordering}, {"level", level}, {"gw", gw}};
  return j;
}

json model_to_json(const ModelDescriptor& m) {
  json j;
  j["schema"] = "parmod/model/1";
  j["kind"] = model_kind_name(m);
  struct Filler {
    json& j;
    void operator()(const InteriorModel& v) {
      j["weight"] = weight_to_json(v.weight);
    }
    void operator()(const WallDivisorModel& v) {
      j["weight"] = weight_to_json(v.weight);
      j["wall"] = wall_to_json(v.wall);
    }
    void operator()(const ProductModel& v) {
      j["rank_sub"] = v.rank_sub;
      j["deg_sub"] = v.deg_sub;
      j["rank_quot"] = v.rank_quot;
      j["deg_quot"] = v.deg_quot;
      j["weight_sub"] = rows_json(v.weight_sub);
      j["weight_quot"] = rows_json(v.weight_quot);
      j["certificate"] = certificate_to_json(v.certificate);
    }
    void operator()(const PartialFlagModel& v) {
      j["point"] = v.point;
      j["step"] = v.step;
      j["weight"] = rows_json(v.weight);
    }
    void operator()(const DegreeShiftModel& v) {
      j["point"] = v.point;
      j["degree"] = v.degree;
      j["weight"] = rows_json(v.weight);
    }
  };
  std::visit(Filler{j}, m);
  return j;
}

json fano_report_to_json(const WeakFanoReport& rep) {
  json j;
  j["schema"] = "parmod/fano-report/1";
  j["rank"] = rep.r;
  j["points"] = rep.n;
  j["weight"] = weight_to_json(rep.weight);
  j["dominant"] = rep.dominant;
  j["no_blow_down_steps"] = rep.no_blow_down_steps;
  j["all_steps_certified"] = rep.all_steps_certified;
  j["no_boundary_steps"] = rep.no_boundary_steps;
  j["attempts"] = rep.attempts;
  j["trace"] = dominance_trace_to_json(rep.trace);
  return j;
}

}  // namespace parmod
