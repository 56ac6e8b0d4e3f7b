#pragma once

// Report emission for the pangular CLI. Output is the machine contract:
// floating-point values are serialized with 17 significant digits (round-trip
// exact for doubles) so witnesses re-verify bit-for-bit from reports, JSON
// keys are emitted in lexicographic order, and identical inputs produce
// byte-identical bytes.

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "pangular/certify.hpp"
#include "pangular/extremum.hpp"
#include "pangular/norm.hpp"
#include "pangular/sweep.hpp"
#include "pangular/vec.hpp"

namespace pangular::cli {

enum class Format { Json, Csv, Human };

inline Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "human") return Format::Human;
    throw std::invalid_argument("unknown format '" + text + "' (expected json, csv or human)");
}

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string json_str(std::string_view s) { return "\"" + json_escape(s) + "\""; }

inline std::string json_vec(const Vec& v) {
    std::string out = "[";
    for (int i = 0; i < v.dim(); ++i) {
        if (i > 0) out += ",";
        out += fmt17(v[i]);
    }
    return out + "]";
}

// Coordinates joined by ';' for a single CSV cell.
inline std::string csv_vec(const Vec& v) {
    std::string out;
    for (int i = 0; i < v.dim(); ++i) {
        if (i > 0) out += ";";
        out += fmt17(v[i]);
    }
    return out;
}

// ---------------------------------------------------------------- certify

inline std::string certify_json(const CertifyResult& res, const NormSpec& spec, double p,
                                double q) {
    std::string out = "{";
    out += "\"best_ratio\":" + fmt17(res.best_ratio);
    out += ",\"caveat\":" + json_str(res.caveat);
    out += ",\"evaluations\":" + std::to_string(res.evaluations);
    out += ",\"p\":" + fmt17(p);
    out += ",\"q\":" + fmt17(q);
    out += ",\"spec\":" + json_str(spec.to_string());
    out += ",\"verdict\":" + json_str(to_string(res.verdict));
    if (res.witness) {
        const ViolationWitness& w = *res.witness;
        out += ",\"witness\":{\"alpha\":" + fmt17(w.alpha_p) + ",\"bound\":" + fmt17(w.bound) +
               ",\"ratio\":" + fmt17(w.ratio) + ",\"x\":" + json_vec(w.x) +
               ",\"y\":" + json_vec(w.y) + "}";
    }
    out += "}\n";
    return out;
}

inline std::string certify_csv(const CertifyResult& res, const NormSpec& spec, double p,
                               double q) {
    std::string out = "verdict,spec,p,q,best_ratio,evaluations,alpha,bound,ratio,x,y\n";
    out += to_string(res.verdict) + "," + spec.to_string() + "," + fmt17(p) + "," + fmt17(q) +
           "," + fmt17(res.best_ratio) + "," + std::to_string(res.evaluations);
    if (res.witness) {
        const ViolationWitness& w = *res.witness;
        out += "," + fmt17(w.alpha_p) + "," + fmt17(w.bound) + "," + fmt17(w.ratio) + "," +
               csv_vec(w.x) + "," + csv_vec(w.y);
    } else {
        out += ",,,,,";
    }
    return out + "\n";
}

inline std::string certify_human(const CertifyResult& res, const NormSpec& spec, double p,
                                 double q) {
    std::string out;
    out += "verdict: " + to_string(res.verdict) + "\n";
    out += "spec: " + spec.to_string() + "  p: " + fmt17(p) + "  q: " + fmt17(q) + "\n";
    out += "best_ratio: " + fmt6(res.best_ratio) + "  evaluations: " +
           std::to_string(res.evaluations) + "\n";
    if (res.witness) {
        const ViolationWitness& w = *res.witness;
        out += "! violation: ratio " + fmt6(w.ratio) + " > 1\n";
        out += "  x = " + csv_vec(w.x) + "\n";
        out += "  y = " + csv_vec(w.y) + "\n";
        out += "  alpha_p = " + fmt6(w.alpha_p) + "  bound = " + fmt6(w.bound) + "\n";
    }
    if (!res.caveat.empty()) out += "caveat: " + res.caveat + "\n";
    return out;
}

// ------------------------------------------------------------------ lorch

inline std::string lorch_json(const LorchOutcome& out_come, const NormSpec& spec,
                              long long budget) {
    const bool found = out_come.found();
    std::string out = "{";
    out += "\"best_margin\":" + fmt17(out_come.best_margin);
    out += ",\"caveat\":" + json_str(found ? "" : "search is not a proof");
    out += ",\"budget\":" + std::to_string(budget);
    out += ",\"evaluations\":" + std::to_string(out_come.evaluations);
    out += ",\"pairs_tested\":" + std::to_string(out_come.pairs_tested);
    out += ",\"spec\":" + json_str(spec.to_string());
    out += ",\"verdict\":" +
           json_str(to_string(found ? Verdict::NotInnerProduct
                                    : Verdict::ConsistentWithInnerProduct));
    if (found) {
        const LorchWitness& w = *out_come.witness;
        out += ",\"witness\":{\"gamma\":" + fmt17(w.gamma) + ",\"lhs\":" + fmt17(w.lhs) +
               ",\"margin\":" + fmt17(w.margin) + ",\"rhs\":" + fmt17(w.rhs) +
               ",\"x\":" + json_vec(w.x) + ",\"y\":" + json_vec(w.y) + "}";
    }
    out += "}\n";
    return out;
}

inline std::string lorch_csv(const LorchOutcome& oc, const NormSpec& spec, long long budget) {
    std::string out = "verdict,spec,budget,best_margin,pairs_tested,evaluations,gamma,lhs,rhs,margin,x,y\n";
    out += to_string(oc.found() ? Verdict::NotInnerProduct : Verdict::ConsistentWithInnerProduct) +
           "," + spec.to_string() + "," + std::to_string(budget) + "," + fmt17(oc.best_margin) +
           "," + std::to_string(oc.pairs_tested) + "," + std::to_string(oc.evaluations);
    if (oc.found()) {
        const LorchWitness& w = *oc.witness;
        out += "," + fmt17(w.gamma) + "," + fmt17(w.lhs) + "," + fmt17(w.rhs) + "," +
               fmt17(w.margin) + "," + csv_vec(w.x) + "," + csv_vec(w.y);
    } else {
        out += ",,,,,,";
    }
    return out + "\n";
}

inline std::string lorch_human(const LorchOutcome& oc, const NormSpec& spec) {
    std::string out;
    const bool found = oc.found();
    out += "verdict: " +
           to_string(found ? Verdict::NotInnerProduct : Verdict::ConsistentWithInnerProduct) +
           "\n";
    out += "spec: " + spec.to_string() + "  pairs: " + std::to_string(oc.pairs_tested) +
           "  best_margin: " + fmt6(oc.best_margin) + "\n";
    if (found) {
        const LorchWitness& w = *oc.witness;
        out += "! equal-norm dilation violated: ||x+y|| = " + fmt6(w.lhs) +
               " > " + fmt6(w.rhs) + " at gamma = " + fmt6(w.gamma) + "\n";
        out += "  x = " + csv_vec(w.x) + "\n";
        out += "  y = " + csv_vec(w.y) + "\n";
    } else {
        out += "caveat: search is not a proof\n";
    }
    return out;
}

// ------------------------------------------------------------- fp-profile

inline std::string profile_json(const FpProfile& prof) {
    std::string out = "{";
    out += "\"a\":" + fmt17(prof.a);
    out += ",\"b\":" + fmt17(prof.b);
    out += ",\"f0\":" + fmt17(prof.f0);
    out += ",\"f1\":" + fmt17(prof.f1);
    out += ",\"grid\":[";
    for (std::size_t i = 0; i < prof.grid.size(); ++i) {
        if (i > 0) out += ",";
        out += "[" + fmt17(prof.grid[i].first) + "," + fmt17(prof.grid[i].second) + "]";
    }
    out += "]";
    if (prof.p0) out += ",\"p0\":" + fmt17(*prof.p0);
    out += ",\"sign_changes\":" + std::to_string(prof.sign_changes);
    out += "}\n";
    return out;
}

inline std::string profile_csv(const FpProfile& prof) {
    std::string out = "p,f\n";
    for (const auto& [p, f] : prof.grid) out += fmt17(p) + "," + fmt17(f) + "\n";
    return out;
}

inline std::string profile_human(const FpProfile& prof) {
    std::string out;
    out += "a: " + fmt17(prof.a) + "  b: " + fmt17(prof.b) + "\n";
    out += "f(0): " + fmt6(prof.f0) + "  f(1): " + fmt6(prof.f1) +
           "  ceiling (1+a^2)/b: " + fmt6((1.0 + prof.a * prof.a) / prof.b) + "\n";
    if (prof.p0) {
        out += "interior critical point p0: " + fmt17(*prof.p0) + "\n";
    } else {
        out += "! no unique interior critical point located\n";
    }
    out += "sign changes of E on grid: " + std::to_string(prof.sign_changes) +
           " (derivative signs at 0/1: " + std::to_string(prof.deriv_sign_at_0) + "/" +
           std::to_string(prof.deriv_sign_at_1) + ")\n";
    return out;
}

// ------------------------------------------------------------ check-bounds

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "p,q,kind,max_ratio,flag,argmax_x,argmax_y\n";
    for (const SweepRow& r : rows) {
        out += fmt17(r.p) + ",";
        if (r.q) out += fmt17(*r.q);
        out += "," + r.kind + "," + fmt17(r.max_ratio) + "," + to_string(r.flag) + "," +
               csv_vec(r.argmax_x) + "," + csv_vec(r.argmax_y) + "\n";
    }
    return out;
}

inline std::string sweep_json(const std::vector<SweepRow>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        if (i > 0) out += ",";
        out += "{\"argmax_x\":" + json_vec(r.argmax_x) + ",\"argmax_y\":" + json_vec(r.argmax_y) +
               ",\"flag\":" + json_str(to_string(r.flag)) + ",\"kind\":" + json_str(r.kind) +
               ",\"max_ratio\":" + fmt17(r.max_ratio) + ",\"p\":" + fmt17(r.p);
        if (r.q) out += ",\"q\":" + fmt17(*r.q);
        out += "}";
    }
    out += "]\n";
    return out;
}

inline std::string sweep_human(const std::vector<SweepRow>& rows) {
    std::string out;
    for (const SweepRow& r : rows) {
        out += (r.flag == SweepFlag::Ok ? "  " : "! ");
        out += "p=" + fmt6(r.p) + " kind=" + r.kind + " max_ratio=" + fmt6(r.max_ratio) + " " +
               to_string(r.flag) + "\n";
    }
    return out;
}

// ----------------------------------------------------------- validate-norm

inline std::string axioms_json(const AxiomReport& rep, const NormSpec& spec,
                               std::uint64_t seed) {
    std::string out = "{";
    out += "\"dim\":" + std::to_string(spec.dim());
    out += ",\"failures\":[";
    for (std::size_t i = 0; i < rep.failures.size(); ++i) {
        const AxiomFailure& f = rep.failures[i];
        if (i > 0) out += ",";
        out += "{\"axiom\":" + json_str(f.axiom) + ",\"lhs\":" + fmt17(f.lhs) +
               ",\"rhs\":" + fmt17(f.rhs) + ",\"t\":" + fmt17(f.t) + ",\"u\":" + json_vec(f.u) +
               ",\"v\":" + json_vec(f.v) + "}";
    }
    out += "]";
    out += ",\"norm\":" + json_str(spec.to_string());
    out += ",\"samples\":" + std::to_string(rep.samples);
    out += ",\"seed\":" + std::to_string(seed);
    out += "}\n";
    return out;
}

inline std::string axioms_csv(const AxiomReport& rep) {
    std::string out = "axiom,t,lhs,rhs,v,u\n";
    for (const AxiomFailure& f : rep.failures) {
        out += f.axiom + "," + fmt17(f.t) + "," + fmt17(f.lhs) + "," + fmt17(f.rhs) + "," +
               csv_vec(f.v) + "," + csv_vec(f.u) + "\n";
    }
    return out;
}

inline std::string axioms_human(const AxiomReport& rep, const NormSpec& spec) {
    std::string out = "norm: " + spec.to_string() + "  samples: " + std::to_string(rep.samples) +
                      "  failures: " + std::to_string(rep.failures.size()) + "\n";
    for (const AxiomFailure& f : rep.failures) {
        out += "! " + f.axiom + " failed: lhs=" + fmt17(f.lhs) + " rhs=" + fmt17(f.rhs) + "\n";
    }
    return out;
}

}  // namespace pangular::cli
