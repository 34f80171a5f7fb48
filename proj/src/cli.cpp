#include "fo/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "fo/errors.hpp"
#include "fo/fo_bracket.hpp"
#include "fo/harmonic.hpp"
#include "fo/io.hpp"
#include "fo/pencil.hpp"
#include "fo/polar.hpp"
#include "fo/selftest.hpp"

namespace fo::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "fo-poisson/1";

constexpr const char* kUsage = R"(usage: fo <command> [args] [--format json|text]

commands:
  bracket Q1 Q2 [--chart k]        Jacobian Poisson bivector of a pencil
  schouten Q1 Q2 Q3 Q4             Schouten bracket trivector and its quartic
  phi Q1 Q2 Q3 Q4                  gradient-determinant quartic Phi
  verify-d Q1 Q2 Q3 Q4             check [Pi_12, Pi_34] = 4*Phi exactly
  jacobi Q1 Q2                     jacobiator of the pencil's bivector
  compatible --pencils LIST        pairwise compatibility of pencils
  classify --pencils LIST          concurrent / coplanar / incompatible
  polar Q1 Q2 --point "a,b,c,d"    polar line of a rational point
  quartic-surface --pencils "P;P'" quartic where the two polar lines meet
  vanish Q1 Q2                     ideal-membership certificates for E^Pi
  linearize Q1 Q2 --point "a,b,c,d" conormal Lie structure at a curve point
  discriminant Q1 Q2               pencil discriminant and singular members
  harmonic Q1 Q2 --point "floats" [--tol t]  numeric polar-line cross-check
  selftest [--trials N] [--seed S] seeded randomized property suites

Pencil lists are semicolon-separated pencils of comma-separated quadrics,
e.g. --pencils "x1^2,x1*x2;x1*x3,x1*x4". Polynomials use the grammar
coeff*monomial terms, variables x1..x4, rational coefficients a or a/b.
)";

struct Args {
    std::string cmd;
    std::vector<std::string> pos;
    std::map<std::string, std::string> flags;
};

Args parse_args(const std::vector<std::string>& argv) {
    Args a;
    size_t i = 0;
    if (i < argv.size() && argv[i][0] != '-') a.cmd = argv[i++];
    for (; i < argv.size(); ++i) {
        const std::string& t = argv[i];
        if (t.rfind("--", 0) == 0) {
            std::string key = t.substr(2);
            auto eq = key.find('=');
            if (eq != std::string::npos) {
                a.flags[key.substr(0, eq)] = key.substr(eq + 1);
            } else {
                if (i + 1 >= argv.size())
                    throw InputError("flag --" + key + " needs a value");
                a.flags[key] = argv[++i];
            }
        } else {
            a.pos.push_back(t);
        }
    }
    return a;
}

const std::string& flag_or(const Args& a, const std::string& key, const std::string& def) {
    auto it = a.flags.find(key);
    return it == a.flags.end() ? def : it->second;
}

void check_flags(const Args& a, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : a.flags) {
        if (key == "format") {
            if (value != "json" && value != "text")
                throw InputError("--format must be json or text");
            continue;
        }
        bool ok = false;
        for (const char* k : allowed) ok = ok || key == k;
        if (!ok) throw InputError("unknown flag --" + key + " for command '" + a.cmd + "'");
    }
}

void need_positionals(const Args& a, size_t n) {
    if (a.pos.size() != n)
        throw InputError("command '" + a.cmd + "' expects " + std::to_string(n) +
                         " positional argument(s), got " + std::to_string(a.pos.size()));
}

Poly arg_quadric(const Args& a, size_t i) {
    Poly q = parse_poly(a.pos[i], 4);
    if (!q.is_homogeneous(2) || q.is_zero())
        throw InputError("argument " + std::to_string(i + 1) +
                         " must be a nonzero homogeneous quadric: " + a.pos[i]);
    return q;
}

std::vector<QuadricPencil> parse_pencils(const std::string& list) {
    std::vector<QuadricPencil> pencils;
    std::istringstream ss(list);
    std::string chunk;
    while (std::getline(ss, chunk, ';')) {
        auto comma = chunk.find(',');
        if (comma == std::string::npos || chunk.find(',', comma + 1) != std::string::npos)
            throw InputError("each pencil needs exactly two comma-separated quadrics: " + chunk);
        Poly q1 = parse_poly(chunk.substr(0, comma), 4);
        Poly q2 = parse_poly(chunk.substr(comma + 1), 4);
        for (const Poly* q : {&q1, &q2})
            if (q->is_zero() || !q->is_homogeneous(2))
                throw InputError("pencil members must be nonzero quadrics: " + chunk);
        pencils.emplace_back(q1, q2);
    }
    if (pencils.empty()) throw InputError("empty pencil list");
    return pencils;
}

ProjPoint arg_point(const Args& a) {
    auto it = a.flags.find("point");
    if (it == a.flags.end()) throw InputError("command '" + a.cmd + "' needs --point");
    std::vector<Rational> v = parse_rational_tuple(it->second);
    if (v.size() != 4) throw InputError("--point needs 4 coordinates");
    return ProjPoint({v[0], v[1], v[2], v[3]});
}

std::array<double, 4> arg_float_point(const Args& a) {
    auto it = a.flags.find("point");
    if (it == a.flags.end()) throw InputError("command '" + a.cmd + "' needs --point");
    std::array<double, 4> p{};
    std::istringstream ss(it->second);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 4) throw InputError("--point needs 4 coordinates");
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw InputError("empty coordinate in --point");
        tok = tok.substr(a, b - a + 1);
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size() || !std::isfinite(v))
            throw InputError("bad float coordinate '" + tok + "'");
        p[static_cast<size_t>(i++)] = v;
    }
    if (i != 4) throw InputError("--point needs 4 coordinates");
    return p;
}

json mv_to_json(const Multivector& mv, const std::vector<int>& labels,
                const std::vector<std::string>& var_names) {
    json arr = json::array();
    for (const auto& [idx, c] : mv.components()) {
        json item;
        item["indices"] = json::array();
        for (int i : idx) item["indices"].push_back(labels[static_cast<size_t>(i)]);
        item["coeff"] = poly_to_string(c, var_names);
        arr.push_back(std::move(item));
    }
    return arr;
}

std::vector<int> default_labels(int n) {
    std::vector<int> l;
    for (int i = 1; i <= n; ++i) l.push_back(i);
    return l;
}

std::vector<std::string> x_names(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

struct ChartNaming {
    std::vector<int> labels;
    std::vector<std::string> vars, axes;
};

ChartNaming chart_naming(int chart) {
    ChartNaming c;
    for (int i = 1; i <= 4; ++i) {
        if (i == chart) continue;
        c.labels.push_back(i);
        c.vars.push_back("y" + std::to_string(i));
        c.axes.push_back("d" + std::to_string(i));
    }
    return c;
}

json rational_vec(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const Rational& c : v) arr.push_back(c.str());
    return arr;
}

struct Response {
    json body;
    std::string text;
    int code = 0;
};

void emit(const Response& r, const Args& a, std::ostream& out) {
    if (flag_or(a, "format", "text") == "json") {
        out << r.body.dump(2) << "\n";
    } else {
        out << r.text;
    }
}

// ---- command handlers ----

Response cmd_bracket(const Args& a) {
    check_flags(a, {"chart"});
    need_positionals(a, 2);
    int chart = std::stoi(flag_or(a, "chart", "1"));
    if (chart < 1 || chart > 4) throw InputError("--chart must be 1..4");
    FOBivector b = fo_bivector(arg_quadric(a, 0), arg_quadric(a, 1));
    Multivector aff = dehomogenize(b.pi, chart);
    ChartNaming cn = chart_naming(chart);

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "bracket";
    r.body["pi"] = mv_to_json(b.pi, default_labels(4), x_names(4));
    r.body["chart"] = chart;
    r.body["pi_chart"] = mv_to_json(aff, cn.labels, cn.vars);
    std::ostringstream os;
    os << "Pi = " << multivector_to_string(b.pi) << "\n"
       << "chart x" << chart << "=1: " << multivector_to_string(aff, cn.vars, cn.axes) << "\n";
    r.text = os.str();
    return r;
}

Response cmd_schouten(const Args& a) {
    check_flags(a, {});
    need_positionals(a, 4);
    Poly q1 = arg_quadric(a, 0), q2 = arg_quadric(a, 1);
    Poly q3 = arg_quadric(a, 2), q4 = arg_quadric(a, 3);
    Multivector t = compatibility_bracket(q1, q2, q3, q4);
    Poly quartic = quartic_from_trivector(t);

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "schouten";
    r.body["trivector"] = mv_to_json(t, default_labels(4), x_names(4));
    r.body["quartic"] = poly_to_string(quartic);
    std::ostringstream os;
    os << "[Pi_12, Pi_34] = " << multivector_to_string(t) << "\n"
       << "quartic = " << poly_to_string(quartic) << "\n";
    r.text = os.str();
    return r;
}

Response cmd_phi(const Args& a) {
    check_flags(a, {});
    need_positionals(a, 4);
    Poly phi = phi_quartic(arg_quadric(a, 0), arg_quadric(a, 1),
                           arg_quadric(a, 2), arg_quadric(a, 3));
    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "phi";
    r.body["quartic"] = poly_to_string(phi);
    r.text = "phi = " + poly_to_string(phi) + "\n";
    return r;
}

Response cmd_verify_d(const Args& a) {
    check_flags(a, {});
    need_positionals(a, 4);
    BracketIdentityReport rep = verify_bracket_identity(arg_quadric(a, 0), arg_quadric(a, 1),
                                          arg_quadric(a, 2), arg_quadric(a, 3));
    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "verify-d";
    r.body["lhs"] = poly_to_string(rep.lhs);
    r.body["rhs"] = poly_to_string(rep.rhs);
    r.body["equal"] = rep.equal;
    std::ostringstream os;
    os << "lhs = " << poly_to_string(rep.lhs) << "\n"
       << "rhs = " << poly_to_string(rep.rhs) << "\n"
       << "equal: " << (rep.equal ? "yes" : "NO") << "\n";
    r.text = os.str();
    r.code = rep.equal ? 0 : 1;
    return r;
}

Response cmd_jacobi(const Args& a) {
    check_flags(a, {});
    need_positionals(a, 2);
    JacobiReport rep = verify_jacobi(fo_bivector(arg_quadric(a, 0), arg_quadric(a, 1)));
    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "jacobi";
    r.body["is_poisson"] = rep.is_poisson;
    r.body["jacobiator"] = mv_to_json(rep.jacobiator, default_labels(4), x_names(4));
    std::ostringstream os;
    os << "jacobiator = " << multivector_to_string(rep.jacobiator) << "\n"
       << "poisson: " << (rep.is_poisson ? "yes" : "NO") << "\n";
    r.text = os.str();
    r.code = rep.is_poisson ? 0 : 1;
    return r;
}

Response cmd_compatible(const Args& a) {
    check_flags(a, {"pencils"});
    need_positionals(a, 0);
    auto it = a.flags.find("pencils");
    if (it == a.flags.end()) throw InputError("compatible needs --pencils");
    std::vector<QuadricPencil> ps = parse_pencils(it->second);
    if (ps.size() < 2) throw InputError("compatible needs at least 2 pencils");

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "compatible";
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j)
            if (!pairwise_compatible(ps[i], ps[j])) {
                r.body["classification"] = "incompatible";
                r.body["witness"] = {static_cast<int>(i), static_cast<int>(j)};
                std::ostringstream os;
                os << "incompatible (pencils " << i << " and " << j << ")\n";
                r.text = os.str();
                r.code = 1;
                return r;
            }
    r.body["classification"] = "compatible";
    r.text = "compatible\n";
    return r;
}

Response cmd_classify(const Args& a) {
    check_flags(a, {"pencils"});
    need_positionals(a, 0);
    auto it = a.flags.find("pencils");
    if (it == a.flags.end()) throw InputError("classify needs --pencils");
    CollectionClassification c = classify_collection(parse_pencils(it->second));

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "classify";
    std::ostringstream os;
    switch (c.kind) {
        case CollectionClassification::Kind::incompatible:
            r.body["classification"] = "incompatible";
            r.body["witness"] = {c.witness->first, c.witness->second};
            os << "incompatible (pencils " << c.witness->first << " and "
               << c.witness->second << ")\n";
            r.code = 1;
            break;
        case CollectionClassification::Kind::concurrent:
            r.body["classification"] = "concurrent";
            r.body["shared_quadric"] = poly_to_string(*c.shared_quadric);
            os << "concurrent: shared quadric " << poly_to_string(*c.shared_quadric) << "\n";
            break;
        case CollectionClassification::Kind::coplanar: {
            r.body["classification"] = "coplanar";
            json basis = json::array();
            for (const Poly& w : c.subspace_basis) basis.push_back(poly_to_string(w));
            r.body["subspace_basis"] = basis;
            os << "coplanar: 3-dim quadric subspace with basis\n";
            for (const Poly& w : c.subspace_basis) os << "  " << poly_to_string(w) << "\n";
            break;
        }
    }
    r.body["smooth_curve_semantics"] = c.smooth_curve_semantics;
    r.body["generic"] = c.generic;
    if (!c.smooth_curve_semantics)
        os << "note: some pencil is non-generic; linear-algebra classification only\n";
    r.text = os.str();
    return r;
}

Response cmd_polar(const Args& a) {
    check_flags(a, {"point"});
    need_positionals(a, 2);
    QuadricPencil pencil(arg_quadric(a, 0), arg_quadric(a, 1));
    ProjPoint p = arg_point(a);
    ProjLine line = polar_line(pencil, p);

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "polar";
    r.body["point"] = rational_vec({p.x[0], p.x[1], p.x[2], p.x[3]});
    r.body["forms"] = {poly_to_string(line.f1), poly_to_string(line.f2)};
    json pl = json::array();
    for (const Rational& w : line.plucker_dual()) pl.push_back(w.str());
    r.body["plucker_dual"] = pl;
    std::ostringstream os;
    os << "polar line of p: intersection of\n"
       << "  " << poly_to_string(line.f1) << " = 0\n"
       << "  " << poly_to_string(line.f2) << " = 0\n";
    r.text = os.str();
    return r;
}

Response cmd_quartic_surface(const Args& a) {
    check_flags(a, {"pencils"});
    need_positionals(a, 0);
    auto it = a.flags.find("pencils");
    if (it == a.flags.end()) throw InputError("quartic-surface needs --pencils");
    std::vector<QuadricPencil> ps = parse_pencils(it->second);
    if (ps.size() != 2) throw InputError("quartic-surface needs exactly 2 pencils");
    Poly q = intersection_quartic(ps[0], ps[1]);

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "quartic-surface";
    r.body["quartic"] = poly_to_string(q);
    r.text = "quartic = " + poly_to_string(q) + "\n";
    return r;
}

Response cmd_vanish(const Args& a) {
    check_flags(a, {});
    need_positionals(a, 2);
    VanishingCertificate cert = vanishing_certificate(arg_quadric(a, 0), arg_quadric(a, 1));

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "vanish";
    json entries = json::array();
    std::ostringstream os;
    for (const auto& e : cert.entries) {
        json item;
        item["indices"] = json::array();
        for (int i : e.indices) item["indices"].push_back(i + 1);
        item["cubic"] = poly_to_string(e.cubic);
        item["l1"] = poly_to_string(e.l1);
        item["l2"] = poly_to_string(e.l2);
        item["verified"] = e.verified;
        entries.push_back(std::move(item));
        os << "component d" << e.indices[0] + 1 << "^d" << e.indices[1] + 1 << "^d"
           << e.indices[2] + 1 << ": " << poly_to_string(e.cubic) << " = ("
           << poly_to_string(e.l1) << ")*Q1 + (" << poly_to_string(e.l2) << ")*Q2 "
           << (e.verified ? "[ok]" : "[FAILED]") << "\n";
    }
    r.body["certificates"] = std::move(entries);
    r.body["all_verified"] = cert.all_verified;
    r.text = os.str();
    r.code = cert.all_verified ? 0 : 1;
    return r;
}

Response cmd_linearize(const Args& a) {
    check_flags(a, {"point"});
    need_positionals(a, 2);
    LinearizeResult res = linearize_at(arg_quadric(a, 0), arg_quadric(a, 1), arg_point(a));

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "linearize";
    if (res.status == LinearizeResult::Status::singular_point) {
        r.body["status"] = "singular_point";
        r.body["message"] = res.message;
        r.text = "singular point: " + res.message + "\n";
        r.code = 3;
        return r;
    }
    const ConormalStructure& cs = *res.structure;
    r.body["status"] = "ok";
    r.body["chart"] = cs.chart;
    r.body["axes"] = {cs.axis_vars[0], cs.axis_vars[1], cs.axis_vars[2]};
    r.body["point"] = rational_vec(cs.chart_point);
    json brs = json::array();
    for (const auto& [pair, c] : cs.brackets) {
        json item;
        item["pair"] = {cs.axis_vars[static_cast<size_t>(pair.first)],
                        cs.axis_vars[static_cast<size_t>(pair.second)]};
        item["coeffs"] = rational_vec(c);
        brs.push_back(std::move(item));
    }
    r.body["brackets"] = std::move(brs);
    r.body["plane"] = {rational_vec(cs.plane[0]), rational_vec(cs.plane[1])};
    r.body["constant_part_zero"] = cs.constant_part_zero;
    r.body["plane_abelian"] = cs.plane_abelian;
    r.body["ad_scalar_ok"] = cs.ad_scalar_ok;
    r.body["ad_scalar"] = cs.ad_scalar.str();
    r.body["complement_axis"] = cs.complement_axis >= 0
        ? cs.axis_vars[static_cast<size_t>(cs.complement_axis)] : -1;
    r.body["jacobi_ok"] = cs.jacobi_ok;

    bool all = cs.constant_part_zero && cs.plane_abelian && cs.ad_scalar_ok && cs.jacobi_ok;
    std::ostringstream os;
    os << "chart x" << cs.chart << "=1, conormal structure at p:\n"
       << "  bivector vanishes at p: " << (cs.constant_part_zero ? "yes" : "NO") << "\n"
       << "  (T_pE)-perp abelian:    " << (cs.plane_abelian ? "yes" : "NO") << "\n"
       << "  ad(y) scalar on plane:  " << (cs.ad_scalar_ok ? "yes" : "NO")
       << " (scalar " << cs.ad_scalar.str() << ")\n"
       << "  Jacobi identity:        " << (cs.jacobi_ok ? "yes" : "NO") << "\n";
    r.text = os.str();
    r.code = all ? 0 : 1;
    return r;
}

Response cmd_discriminant(const Args& a) {
    check_flags(a, {});
    need_positionals(a, 2);
    QuadricPencil pencil(arg_quadric(a, 0), arg_quadric(a, 1));
    GenericityReport g = is_generic_pencil(pencil);

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "discriminant";
    r.body["discriminant"] = poly_to_string(g.discriminant); // x1 = lambda, x2 = mu
    r.body["generic"] = g.generic;
    switch (g.diagnosis) {
        case GenericityReport::Diagnosis::ok: r.body["diagnosis"] = "ok"; break;
        case GenericityReport::Diagnosis::zero_discriminant:
            r.body["diagnosis"] = "zero_discriminant"; break;
        case GenericityReport::Diagnosis::repeated_root:
            r.body["diagnosis"] = "repeated_root"; break;
    }
    if (g.squarefree_part) r.body["squarefree_part"] = poly_to_string(*g.squarefree_part);

    std::ostringstream os;
    os << "discriminant (x1=lambda, x2=mu): " << poly_to_string(g.discriminant) << "\n"
       << "generic: " << (g.generic ? "yes" : "no") << " (" << g.message << ")\n";
    if (g.generic) {
        SingularMembersReport sm = rational_singular_members(pencil);
        json members = json::array();
        for (const SingularMember& m : sm.rational_members) {
            json item;
            item["lambda"] = m.lambda.str();
            item["mu"] = m.mu.str();
            item["vertex"] = rational_vec({m.vertex.x[0], m.vertex.x[1], m.vertex.x[2], m.vertex.x[3]});
            members.push_back(std::move(item));
            os << "singular member (" << m.lambda.str() << " : " << m.mu.str()
               << "), vertex (" << m.vertex.x[0].str() << ", " << m.vertex.x[1].str()
               << ", " << m.vertex.x[2].str() << ", " << m.vertex.x[3].str() << ")\n";
        }
        r.body["rational_members"] = std::move(members);
        r.body["irrational_count"] = sm.irrational_count;
        if (sm.irrational_count > 0)
            os << sm.irrational_count
               << " irrational singular member(s); the discriminant is the exact certificate\n";
    }
    r.text = os.str();
    return r;
}

Response cmd_harmonic(const Args& a) {
    check_flags(a, {"point", "tol"});
    need_positionals(a, 2);
    QuadricPencil pencil(arg_quadric(a, 0), arg_quadric(a, 1));
    double tol = std::stod(flag_or(a, "tol", "1e-9"));
    HarmonicReport rep = harmonic_check(pencil, arg_float_point(a), tol);

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "harmonic";
    const char* status = rep.status == HarmonicReport::Status::verified ? "verified"
                       : rep.status == HarmonicReport::Status::inconclusive ? "inconclusive"
                                                                            : "failed";
    r.body["status"] = status;
    if (!rep.reason.empty()) r.body["reason"] = rep.reason;
    r.body["lambda"] = rep.lambda;
    r.body["mu"] = rep.mu;
    r.body["max_cross_ratio_residual"] = rep.max_cross_ratio_residual;
    r.body["max_polar_residual"] = rep.max_polar_residual;
    r.body["tol"] = tol;

    std::ostringstream os;
    os << "status: " << status << "\n";
    if (!rep.reason.empty()) os << "reason: " << rep.reason << "\n";
    if (rep.lines_checked > 0)
        os << "max cross-ratio residual: " << rep.max_cross_ratio_residual << "\n"
           << "max polar residual:       " << rep.max_polar_residual << "\n";
    r.text = os.str();
    r.code = rep.status == HarmonicReport::Status::verified ? 0
           : rep.status == HarmonicReport::Status::inconclusive ? 3 : 1;
    return r;
}

Response cmd_selftest(const Args& a) {
    check_flags(a, {"trials", "seed"});
    need_positionals(a, 0);
    int trials = std::stoi(flag_or(a, "trials", "25"));
    if (trials < 1) throw InputError("--trials must be >= 1");
    uint64_t seed = std::stoull(flag_or(a, "seed", "1"));
    std::vector<SuiteResult> suites = run_selftest(trials, seed);

    Response r;
    r.body["schema"] = kSchema;
    r.body["command"] = "selftest";
    r.body["trials"] = trials;
    r.body["seed"] = seed;
    json arr = json::array();
    bool all = true;
    std::ostringstream os;
    for (const SuiteResult& s : suites) {
        json item;
        item["name"] = s.name;
        item["trials"] = s.trials;
        item["passed"] = s.passed;
        item["failed"] = s.failed;
        arr.push_back(std::move(item));
        all = all && s.failed == 0;
        os << s.name << ": " << s.passed << "/" << s.trials
           << (s.failed == 0 ? " pass" : " FAIL") << "\n";
    }
    r.body["suites"] = std::move(arr);
    r.body["all_passed"] = all;
    r.text = os.str();
    r.code = all ? 0 : 1;
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Args a;
    try {
        a = parse_args(args);
        if (a.cmd.empty() || a.cmd == "help") {
            (a.cmd.empty() ? err : out) << kUsage;
            return a.cmd.empty() ? 2 : 0;
        }
        Response r;
        if (a.cmd == "bracket") r = cmd_bracket(a);
        else if (a.cmd == "schouten") r = cmd_schouten(a);
        else if (a.cmd == "phi") r = cmd_phi(a);
        else if (a.cmd == "verify-d") r = cmd_verify_d(a);
        else if (a.cmd == "jacobi") r = cmd_jacobi(a);
        else if (a.cmd == "compatible") r = cmd_compatible(a);
        else if (a.cmd == "classify") r = cmd_classify(a);
        else if (a.cmd == "polar") r = cmd_polar(a);
        else if (a.cmd == "quartic-surface") r = cmd_quartic_surface(a);
        else if (a.cmd == "vanish") r = cmd_vanish(a);
        else if (a.cmd == "linearize") r = cmd_linearize(a);
        else if (a.cmd == "discriminant") r = cmd_discriminant(a);
        else if (a.cmd == "harmonic") r = cmd_harmonic(a);
        else if (a.cmd == "selftest") r = cmd_selftest(a);
        else {
            err << "unknown command '" << a.cmd << "'\n" << kUsage;
            return 2;
        }
        emit(r, a, out);
        return r.code;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace fo::cli
