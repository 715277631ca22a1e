#include "pnb/cli.hpp"

#include "pnb/chowring.hpp"
#include "pnb/classifier.hpp"
#include "pnb/cohomtab.hpp"
#include "pnb/exterior.hpp"
#include "pnb/monadlab.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pnb::cli {

namespace {

using json = nlohmann::ordered_json;

// --name value / --name=value / bare --name (boolean). Positionals kept in order.
class Flags {
  public:
    explicit Flags(const std::vector<std::string>& args) {
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::string& a = args[i];
            if (a.rfind("--", 0) == 0) {
                auto eq = a.find('=');
                if (eq != std::string::npos) {
                    values_[a.substr(2, eq - 2)] = a.substr(eq + 1);
                } else if (i + 1 < args.size() && !looks_like_flag(args[i + 1])) {
                    values_[a.substr(2)] = args[++i];
                } else {
                    values_[a.substr(2)] = "";
                }
            } else {
                positionals_.push_back(a);
            }
        }
    }

    std::string require(const std::string& name) const {
        auto it = values_.find(name);
        if (it == values_.end() || it->second.empty())
            throw std::invalid_argument("missing required flag --" + name);
        return it->second;
    }

    std::optional<std::string> get(const std::string& name) const {
        auto it = values_.find(name);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    bool has(const std::string& name) const { return values_.count(name) > 0; }

    long require_long(const std::string& name) const { return parse_long(name, require(name)); }

    long get_long(const std::string& name, long fallback) const {
        auto v = get(name);
        if (!v) return fallback;
        return parse_long(name, *v);
    }

    std::string verb(const std::string& command) const {
        if (positionals_.empty())
            throw std::invalid_argument(command + ": missing verb (see README for subcommands)");
        return positionals_[0];
    }

  private:
    static bool looks_like_flag(const std::string& s) {
        // "--foo" is a flag; a bare negative number like "-3" is a value
        return s.rfind("--", 0) == 0;
    }

    static long parse_long(const std::string& name, const std::string& v) {
        try {
            std::size_t used = 0;
            long x = std::stol(v, &used);
            if (used != v.size()) throw std::invalid_argument("");
            return x;
        } catch (...) {
            throw std::invalid_argument("flag --" + name + ": expected an integer, got '" + v + "'");
        }
    }

    std::map<std::string, std::string> values_;
    std::vector<std::string> positionals_;
};

std::vector<long> parse_long_list(const std::string& name, const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("flag --" + name + ": expected a comma-separated integer list");
        }
    }
    if (out.empty()) throw std::invalid_argument("flag --" + name + ": empty list");
    return out;
}

std::pair<long, long> parse_window(const std::string& text) {
    auto colon = text.find(':', 1); // allow a leading '-'
    if (colon == std::string::npos) throw std::invalid_argument("--window: expected lmin:lmax");
    try {
        long lo = std::stol(text.substr(0, colon));
        long hi = std::stol(text.substr(colon + 1));
        if (hi < lo) throw std::invalid_argument("");
        return {lo, hi};
    } catch (...) {
        throw std::invalid_argument("--window: expected lmin:lmax with lmin <= lmax");
    }
}

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

// "rank:c1,...,cn" (rank optional)
ChernVector parse_chern(const std::string& name, const std::string& text, int n) {
    auto colon = text.find(':');
    std::string rank_part = "0", c_part = text;
    if (colon != std::string::npos) {
        rank_part = text.substr(0, colon);
        c_part = text.substr(colon + 1);
    }
    auto cs = parse_long_list(name, c_part);
    if (static_cast<int>(cs.size()) != n)
        throw std::invalid_argument("flag --" + name + ": expected " + std::to_string(n) + " Chern classes");
    std::vector<Int> c;
    for (long x : cs) c.emplace_back(x);
    try {
        return ChernVector(n, Int(rank_part), std::move(c));
    } catch (...) {
        throw std::invalid_argument("flag --" + name + ": bad rank '" + rank_part + "'");
    }
}

json js(const Int& z) { return to_string(z); }
json js(const Rat& q) { return to_string(q); }

json js(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(js(x));
    return a;
}

json js(const ChernVector& c) {
    json o;
    o["n"] = c.n;
    o["rank"] = js(c.rank);
    o["c"] = js(c.c);
    return o;
}

json js(const CohomologyTable& t) {
    json rows = json::array();
    for (long l = t.l_min; l <= t.l_max; ++l) {
        json row;
        row["l"] = std::to_string(l);
        json h = json::array();
        for (int q = 0; q <= t.n; ++q) {
            const auto& v = t.at(l, q);
            h.push_back(v ? json(to_string(*v)) : json("?"));
        }
        row["h"] = h;
        rows.push_back(row);
    }
    return rows;
}

json js(const DecomposableWitness& w) {
    json o;
    o["primary"] = w.primary.to_string();
    if (w.extension) {
        o["extension"] = w.extension->to_string();
        json mp = json::array();
        for (const auto& c : w.minpoly) mp.push_back(js(c));
        o["minpoly"] = mp;
    }
    return o;
}

struct Outcome {
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> provenance;
    int exit_code = 0;
};

// ---- table rendering --------------------------------------------------

bool scalar_array(const json& a) {
    for (const auto& x : a)
        if (x.is_object() || x.is_array()) return false;
    return true;
}

std::string scalar_to_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

void render_value(std::ostream& out, const std::string& prefix, const json& v);

void render_object_array(std::ostream& out, const std::string& prefix, const json& arr) {
    std::vector<std::string> keys;
    for (const auto& row : arr)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) keys.push_back(it.key());
    std::vector<std::vector<std::string>> cells;
    cells.push_back(keys);
    for (const auto& row : arr) {
        std::vector<std::string> line;
        for (const auto& k : keys) {
            if (!row.contains(k)) {
                line.push_back("");
            } else if (row[k].is_array() && scalar_array(row[k])) {
                std::string s;
                for (const auto& x : row[k]) s += (s.empty() ? "" : ",") + scalar_to_text(x);
                line.push_back(s);
            } else if (row[k].is_object() || row[k].is_array()) {
                line.push_back(row[k].dump());
            } else {
                line.push_back(scalar_to_text(row[k]));
            }
        }
        cells.push_back(line);
    }
    std::vector<std::size_t> width(keys.size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    if (!prefix.empty()) out << prefix << ":\n";
    for (const auto& line : cells) {
        out << " ";
        for (std::size_t i = 0; i < line.size(); ++i) {
            out << " " << line[i];
            for (std::size_t pad = line[i].size(); pad < width[i]; ++pad) out << ' ';
        }
        out << "\n";
    }
}

void render_value(std::ostream& out, const std::string& prefix, const json& v) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            render_value(out, prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
        render_object_array(out, prefix, v);
    } else if (v.is_array() && scalar_array(v)) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalar_to_text(x);
        out << prefix << " = [" << s << "]\n";
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            render_value(out, prefix + "[" + std::to_string(i) + "]", v[i]);
    } else {
        out << prefix << " = " << scalar_to_text(v) << "\n";
    }
}

// ---- subcommand handlers ------------------------------------------------

Outcome cmd_chern(const Flags& f) {
    Outcome o;
    std::string verb = f.verb("chern");
    int n = static_cast<int>(f.get_long("n", 4));
    ChernVector a = parse_chern("a", f.require("a"), n);
    o.inputs["verb"] = verb;
    o.inputs["n"] = n;
    o.inputs["a"] = js(a);
    if (verb == "mul") {
        ChernVector b = parse_chern("b", f.require("b"), n);
        o.inputs["b"] = js(b);
        o.result = js(chern_mul(a, b));
        o.provenance = {"whitney-product"};
    } else if (verb == "inv") {
        o.result = js(chern_inv(a));
        o.provenance = {"truncated-series-inverse"};
    } else if (verb == "dual") {
        o.result = js(chern_dual(a));
        o.provenance = {"dual-sign-rule"};
    } else if (verb == "twist") {
        long t = f.require_long("t");
        o.inputs["t"] = std::to_string(t);
        o.result = js(chern_twist(a, t));
        o.provenance = {"line-twist-binomial"};
    } else {
        throw std::invalid_argument("chern: unknown verb '" + verb + "' (mul|inv|dual|twist)");
    }
    return o;
}

Outcome cmd_pfun(const Flags& f) {
    Outcome o;
    int n = static_cast<int>(f.get_long("n", 4));
    ChernVector a = parse_chern("c", f.require("c"), n);
    a.rank = Int(f.get_long("rank", 0));
    o.inputs["n"] = n;
    o.inputs["c"] = js(a.c);
    o.result = js(p_functor(a));
    o.provenance = {"p-functor-series c(P(E)) = 1/c(E^dual)"};
    return o;
}

Outcome cmd_chi(const Flags& f) {
    Outcome o;
    int n = static_cast<int>(f.get_long("n", 4));
    ChernVector a = parse_chern("c", f.require("c"), n);
    a.rank = Int(f.require_long("rank"));
    long l = f.get_long("l", 0);
    o.inputs["n"] = n;
    o.inputs["rank"] = js(a.rank);
    o.inputs["c"] = js(a.c);
    o.inputs["l"] = std::to_string(l);
    o.result["chi"] = js(euler_characteristic(a, l));
    o.provenance = {"hirzebruch-riemann-roch"};
    return o;
}

Outcome cmd_congr(const Flags& f) {
    Outcome o;
    ChernVector a = parse_chern("c", f.require("c"), 4);
    Int h2dual = Int(f.get_long("h2dual", 0));
    o.inputs["c"] = js(a.c);
    o.inputs["h2dual"] = js(h2dual);
    SchwarzenbergerResult s = schwarzenberger_full(a);
    o.result["holds"] = s.holds();
    o.result["mod12"] = s.mod12;
    o.result["parity"] = s.parity;
    if (a.c_at(1) == 5) {
        auto rf = rank_formula(a.c_at(2), a.c_at(3), a.c_at(4), h2dual);
        o.result["rank_formula"] = js(rf.value);
        o.result["rank_integral"] = rf.integral;
        o.result["rr_h2_minus_h1"] = js(rr_h2_minus_h1(a.c_at(2), a.c_at(3), a.c_at(4)));
    }
    o.provenance = {"schwarzenberger-mod-12", "chern-parity", "rr-rank-formula", "rr-h2-minus-h1"};
    return o;
}

Outcome cmd_bott(const Flags& f) {
    Outcome o;
    int n = static_cast<int>(f.require_long("n"));
    int p = static_cast<int>(f.require_long("p"));
    o.inputs["n"] = n;
    o.inputs["p"] = p;
    if (auto w = f.get("window")) {
        auto [lo, hi] = parse_window(*w);
        o.inputs["window"] = *w;
        json rows = json::array();
        for (long l = lo; l <= hi; ++l) {
            json row;
            row["l"] = std::to_string(l);
            row["h"] = js(bott(n, p, l));
            rows.push_back(row);
        }
        o.result["rows"] = rows;
    } else {
        long l = f.require_long("l");
        o.inputs["l"] = std::to_string(l);
        o.result["h"] = js(bott(n, p, l));
    }
    o.provenance = {"bott-formula"};
    return o;
}

Outcome cmd_spectrum(const Flags& f) {
    Outcome o;
    std::string verb = f.verb("spectrum");
    o.inputs["verb"] = verb;
    if (verb == "enum") {
        int c2g = static_cast<int>(f.require_long("c2g"));
        long c3g = f.require_long("c3g");
        SpectrumOptions opts;
        opts.k1_nonpositive = f.has("k1max0");
        o.inputs["c2g"] = c2g;
        o.inputs["c3g"] = std::to_string(c3g);
        o.inputs["k1max0"] = opts.k1_nonpositive;
        json arr = json::array();
        for (const auto& s : enumerate_spectra(c2g, c3g, opts)) {
            json one = json::array();
            for (int k : s.k) one.push_back(std::to_string(k));
            arr.push_back(one);
        }
        o.result["spectra"] = arr;
        o.provenance = {"spectrum-length-sum", "spectrum-connectedness", "impossible-spectra-exclusion"};
        if (opts.k1_nonpositive) o.provenance.push_back("k1-nonpositive-filter");
        return o;
    }
    auto ks = parse_long_list("k", f.require("k"));
    std::vector<int> ki(ks.begin(), ks.end());
    Spectrum s(ki);
    o.inputs["k"] = s.to_string();
    if (verb == "h1") {
        long l = f.require_long("l");
        o.inputs["l"] = std::to_string(l);
        o.result["h1"] = js(spectrum_h1(s, l));
        o.provenance = {"spectrum-h1-line-bundle-sections"};
    } else if (verb == "h2") {
        long l = f.require_long("l");
        o.inputs["l"] = std::to_string(l);
        o.result["h2"] = js(spectrum_h2(s, l));
        o.provenance = {"spectrum-h2-line-bundle-h1"};
    } else if (verb == "props") {
        o.result["nonneg_connected"] = s.nonneg_connected();
        o.result["nonpos_connected"] = s.nonpos_connected();
        o.result["zero_or_double_minus1"] = s.zero_or_double_minus1();
        auto up = s.unstable_plane_order();
        o.result["unstable_plane_order"] = up ? json(std::to_string(*up)) : json("none");
        o.provenance = {"spectrum-shape-predicates"};
    } else {
        throw std::invalid_argument("spectrum: unknown verb '" + verb + "' (enum|h1|h2|props)");
    }
    return o;
}

Outcome cmd_h1(const Flags& f) {
    Outcome o;
    std::string verb = f.verb("h1");
    o.inputs["verb"] = verb;
    if (verb == "formulas") {
        Int c2(f.require_long("c2")), c3(f.require_long("c3")), h0(f.get_long("h0fm1", 0));
        o.inputs["c2"] = js(c2);
        o.inputs["c3"] = js(c3);
        o.inputs["h0fm1"] = js(h0);
        auto [h1m2, h1m1] = h1_formulas(c2, c3, h0);
        o.result["h1_fm2"] = js(h1m2);
        o.result["h1_fm1"] = js(h1m1);
        o.result["consistent"] = (h1m2 >= 0 && h1m1 >= 0);
        o.provenance = {"h1-closed-forms"};
    } else if (verb == "bound11") {
        Int c3(f.require_long("c3"));
        o.inputs["c3"] = js(c3);
        o.result["h0fm1_max"] = js(h0fm1_bound_c2_11(c3));
        o.provenance = {"h0-bound-c2-11"};
    } else if (verb == "bml") {
        Int a(f.require_long("a")), b(f.require_long("b")), c(f.require_long("c")), r(f.require_long("r"));
        o.inputs["a"] = js(a);
        o.inputs["b"] = js(b);
        o.inputs["c"] = js(c);
        o.inputs["r"] = js(r);
        o.result["can_exist"] = bml_bound(a, b, c, r);
        o.provenance = {"bilinear-map-lemma"};
    } else if (verb == "koszul") {
        int n = static_cast<int>(f.require_long("n"));
        auto degrees = parse_long_list("degrees", f.require("degrees"));
        o.inputs["n"] = n;
        o.inputs["degrees"] = f.require("degrees");
        long th = koszul_gg_threshold(n, degrees);
        o.result["threshold"] = std::to_string(th);
        if (f.has("l")) {
            long l = f.require_long("l");
            o.inputs["l"] = std::to_string(l);
            o.result["gg"] = (l >= th);
        }
        o.provenance = {"koszul-kernel-gg-threshold"};
    } else {
        throw std::invalid_argument("h1: unknown verb '" + verb + "' (formulas|bound11|bml|koszul)");
    }
    return o;
}

ComplexExpr::Kind parse_kind(const std::string& k) {
    if (k == "lres") return ComplexExpr::Kind::LeftResolution;
    if (k == "sub") return ComplexExpr::Kind::ShortExactSub;
    if (k == "monad") return ComplexExpr::Kind::Monad;
    throw std::invalid_argument("--kind: expected lres|sub|monad");
}

Outcome cmd_monad(const Flags& f) {
    Outcome o;
    std::string verb = f.verb("monad");
    int n = static_cast<int>(f.get_long("n", 4));
    o.inputs["verb"] = verb;
    o.inputs["n"] = n;
    if (verb == "expr") {
        BundleExpr e = parse_bundle_expr(f.require("e"));
        o.inputs["e"] = e.to_string();
        long lo = 0, hi = 0;
        bool window = false;
        if (auto w = f.get("window")) {
            std::tie(lo, hi) = parse_window(*w);
            window = true;
            o.inputs["window"] = *w;
        }
        ExprData d = expr_data(e, n, lo, hi);
        o.result["rank"] = js(d.rank);
        o.result["chern"] = js(d.chern);
        if (window) o.result["table"] = js(d.table);
        o.provenance = {"bundle-expression-invariants", "bott-formula"};
    } else if (verb == "complex") {
        ComplexExpr cx;
        cx.kind = parse_kind(f.require("kind"));
        for (const auto& t : split_on(f.require("terms"), '|')) cx.terms.push_back(parse_bundle_expr(t));
        long tw = f.get_long("twist", 0);
        o.inputs["kind"] = f.require("kind");
        o.inputs["terms"] = f.require("terms");
        o.inputs["twist"] = std::to_string(tw);
        auto [rank, chern] = complex_cohomology_bundle(cx, n);
        o.result["rank"] = js(rank);
        o.result["chern"] = js(chern_twist(chern, tw));
        if (auto w = f.get("window")) {
            auto [lo, hi] = parse_window(*w);
            o.inputs["window"] = *w;
            CohomologyTable t = monad_cohomology_table(cx, n, lo + tw, hi + tw);
            CohomologyTable shifted(n, lo, hi);
            for (long l = lo; l <= hi; ++l)
                for (int q = 0; q <= n; ++q) shifted.at(l, q) = t.at(l + tw, q);
            o.result["table"] = js(shifted);
        }
        o.provenance = {"alternating-whitney-sum", "long-exact-sequence-forcing"};
    } else if (verb == "catalog") {
        json arr = json::array();
        for (const auto& e : named_bundle_catalog(n)) {
            json row;
            row["name"] = e.name;
            row["rank"] = js(e.rank);
            row["c"] = js(e.chern.c);
            row["partner"] = e.partner;
            row["display"] = e.display;
            arr.push_back(row);
        }
        o.result["entries"] = arr;
        o.provenance = {"classification-catalog"};
    } else {
        throw std::invalid_argument("monad: unknown verb '" + verb + "' (expr|complex|catalog)");
    }
    return o;
}

Outcome cmd_omega(const Flags& f) {
    Outcome o;
    std::string verb = f.verb("omega");
    o.inputs["verb"] = verb;
    auto dim_flag = [&](int fallback) { return static_cast<int>(f.get_long("dim", fallback)); };
    if (verb == "wedge") {
        int d = dim_flag(5);
        Multivector a = parse_multivector(f.require("a"), d);
        Multivector b = parse_multivector(f.require("b"), d);
        o.inputs["dim"] = d;
        o.inputs["a"] = a.to_string();
        o.inputs["b"] = b.to_string();
        o.result["wedge"] = wedge(a, b).to_string();
        o.provenance = {"exterior-product"};
    } else if (verb == "contract") {
        int d = dim_flag(5);
        Multivector alpha = parse_multivector(f.require("alpha"), d, /*covariant=*/true);
        Multivector om = parse_multivector(f.require("omega"), d);
        o.inputs["dim"] = d;
        o.inputs["alpha"] = alpha.to_string();
        o.inputs["omega"] = om.to_string();
        o.result["contraction"] = contract(alpha, om).to_string();
        o.provenance = {"contraction-adjoint-of-wedge"};
    } else if (verb == "rank2") {
        int d = dim_flag(5);
        Multivector om = parse_multivector(f.require("omega"), d);
        o.inputs["dim"] = d;
        o.inputs["omega"] = om.to_string();
        SkewNormalForm nf = skew_normal_form(om);
        o.result["rank"] = nf.rank;
        json basis = json::array();
        for (const auto& v : nf.basis) basis.push_back(v.to_string());
        o.result["basis"] = basis;
        o.provenance = {"skew-normal-form"};
    } else if (verb == "h0matrix") {
        ContractionMorphismSpec spec;
        spec.dimV = static_cast<int>(f.require_long("dim"));
        for (long p : parse_long_list("source", f.require("source")))
            spec.source_terms.push_back({static_cast<int>(p), static_cast<int>(p)});
        for (long q : parse_long_list("target", f.require("target")))
            spec.target_terms.push_back({static_cast<int>(q), static_cast<int>(q)});
        auto cells = split_on(f.require("entries"), ';');
        if (cells.size() != spec.source_terms.size() * spec.target_terms.size())
            throw std::invalid_argument("--entries: expected one cell per (target, source) pair, ';'-separated");
        for (std::size_t j = 0; j < spec.target_terms.size(); ++j)
            for (std::size_t i = 0; i < spec.source_terms.size(); ++i) {
                std::string cell = cells[j * spec.source_terms.size() + i];
                std::string trimmed;
                for (char ch : cell)
                    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
                if (trimmed.empty() || trimmed == "0" || trimmed == "-") continue;
                spec.entries[{static_cast<int>(j), static_cast<int>(i)}] = parse_multivector(cell, spec.dimV);
            }
        o.inputs["dim"] = spec.dimV;
        o.inputs["source"] = f.require("source");
        o.inputs["target"] = f.require("target");
        o.inputs["entries"] = f.require("entries");
        H0Matrix m = h0_matrix(spec);
        o.result["rows"] = m.rows;
        o.result["cols"] = m.cols;
        o.result["rank"] = m.rank;
        json mat = json::array();
        for (const auto& row : m.matrix) {
            json r = json::array();
            for (const auto& x : row) r.push_back(js(x));
            mat.push_back(r);
        }
        o.result["matrix"] = mat;
        o.result["row_labels"] = m.row_labels;
        o.result["col_labels"] = m.col_labels;
        o.provenance = {"h0-contraction-matrix"};
    } else if (verb == "horrocks") {
        int d = dim_flag(6);
        Multivector om = parse_multivector(f.require("omega"), d);
        o.inputs["dim"] = d;
        o.inputs["omega"] = om.to_string();
        o.result["epi"] = horrocks_epi_check(om);
        o.result["skew_rank"] = skew_rank(om);
        o.provenance = {"skew-rank-6-criterion"};
    } else if (verb == "sasakura") {
        Multivector om = parse_multivector(f.require("omega"), 5);
        Multivector v = parse_multivector(f.require("v"), 5);
        o.inputs["omega"] = om.to_string();
        o.inputs["v"] = v.to_string();
        o.result["gg"] = sasakura_gg_check(om, v);
        o.provenance = {"skew-rank-4-plus-transversal-vector-criterion"};
    } else if (verb == "kergg") {
        int d = dim_flag(6);
        Multivector om = parse_multivector(f.require("omega"), d);
        o.inputs["dim"] = d;
        o.inputs["omega"] = om.to_string();
        o.result["gg"] = horrocks_ker_gg_check(om);
        o.provenance = {"kernel-gg-skew-rank-6"};
    } else if (verb == "decomp") {
        int d = dim_flag(5);
        std::vector<Multivector> span;
        for (const auto& s : split_on(f.require("span"), '|')) span.push_back(parse_multivector(s, d));
        o.inputs["dim"] = d;
        o.inputs["span"] = f.require("span");
        DecompResult r = decomposable_in_subspace(span);
        o.result["status"] = r.status == DecompStatus::Found  ? "found"
                             : r.status == DecompStatus::None ? "none"
                                                              : "undecided";
        if (r.witness) o.result["witness"] = js(*r.witness);
        o.provenance = {"pencil-common-root-decision"};
    } else if (verb == "gg12") {
        int d = dim_flag(5);
        std::vector<Multivector> w;
        for (const auto& s : split_on(f.require("w"), '|'))
            w.push_back(parse_multivector(s, d, /*covariant=*/true));
        o.inputs["dim"] = d;
        o.inputs["w"] = f.require("w");
        GgResult r = gg_omega12_check(w);
        o.result["status"] = r.status == GgStatus::Yes ? "yes" : r.status == GgStatus::No ? "no" : "undecided";
        o.result["perp_dim"] = r.perp_dim;
        if (r.witness) o.result["witness"] = js(*r.witness);
        o.provenance = {"perp-decomposable-criterion", "pencil-common-root-decision"};
    } else {
        throw std::invalid_argument("omega: unknown verb '" + verb +
                                    "' (wedge|contract|rank2|h0matrix|horrocks|sasakura|kergg|decomp|gg12)");
    }
    return o;
}

Outcome cmd_classify(const Flags& f) {
    Outcome o;
    std::string verb = f.verb("classify");
    o.inputs["verb"] = verb;
    if (verb == "filter") {
        ClassifierOptions opts;
        opts.cited_rules = !f.has("no-cited");
        opts.mechanized_certificates = !f.has("no-certs");
        opts.c2_min = static_cast<int>(f.get_long("c2min", 9));
        opts.c2_max = static_cast<int>(f.get_long("c2max", 12));
        int n = static_cast<int>(f.get_long("n", 4));
        o.inputs["n"] = n;
        o.inputs["cited_rules"] = opts.cited_rules;
        FilterResult r = filter_chern(n, opts);
        json recs = json::array();
        for (const auto& rec : r.records) {
            json row;
            row["c2"] = js(rec.chern.c_at(2));
            row["c3"] = js(rec.chern.c_at(3));
            row["c4"] = js(rec.chern.c_at(4));
            row["rank"] = js(rec.rank);
            row["constructions"] = rec.construction_tags;
            row["rule_trace"] = rec.rule_trace;
            row["assumptions"] = rec.assumptions;
            recs.push_back(row);
        }
        o.result["records"] = recs;
        json exc = json::array();
        for (const auto& e : r.exclusions) {
            json row;
            row["c2"] = js(e.c2);
            row["c3"] = js(e.c3);
            row["rule"] = e.rule;
            exc.push_back(row);
        }
        o.result["exclusions"] = exc;
        o.provenance = {"spectrum-enumeration", "schwarzenberger-mod-12", "chern-parity",
                        "named-exclusion-rules", "construction-catalog"};
    } else if (verb == "liaison") {
        Int a(f.require_long("a")), b(f.require_long("b"));
        Int dy(f.require_long("degy")), dy2(f.require_long("degy2"));
        o.inputs["a"] = js(a);
        o.inputs["b"] = js(b);
        o.inputs["degy"] = js(dy);
        o.inputs["degy2"] = js(dy2);
        o.result["chi_diff"] = js(liaison_chi(a, b, dy, dy2));
        o.provenance = {"liaison-chi-formula"};
    } else if (verb == "c3rule") {
        Int h0(f.require_long("h0fm1"));
        o.inputs["h0fm1"] = js(h0);
        auto allowed = c2_12_c3_rule(h0);
        if (allowed) {
            json arr = json::array();
            for (long c3 : *allowed) arr.push_back(std::to_string(c3));
            o.result["allowed_c3"] = arr;
        } else {
            o.result["allowed_c3"] = "unrestricted";
        }
        auto comp = c2_12_c3_16_companion();
        o.result["companion_c3_16"] = {{"h1_f_m3", js(comp.h1_f_m3)}, {"h0_f_m1", js(comp.h0_f_m1)}};
        o.provenance = {"c2-12-c3-restriction"};
    } else if (verb == "bookkeeping") {
        bool have_y = f.has("chiy"), have_y2 = f.has("chiy2");
        if (!have_y && !have_y2)
            throw std::invalid_argument("classify bookkeeping: need --chiy and/or --chiy2");
        if (have_y) {
            Int chiy(f.require_long("chiy"));
            o.inputs["chiy"] = js(chiy);
            o.result["c3"] = js(c3_bookkeeping(chiy));
        }
        if (have_y2) {
            Int chiy2(f.require_long("chiy2"));
            o.inputs["chiy2"] = js(chiy2);
            o.result["c3_g"] = js(g_c3_bookkeeping(chiy2));
        }
        if (have_y && have_y2) {
            auto [c3, c3g] = c3_bookkeeping_pair(Int(f.require_long("chiy")), Int(f.require_long("chiy2")));
            o.result["consistent"] = true;
            o.result["c3_minus_c3_g"] = js(Int(c3 - c3g));
        }
        o.provenance = {"liaison-c3-bookkeeping"};
    } else if (verb == "unstable") {
        json arr = json::array();
        for (const auto& c : fprimunstable_table()) {
            json row;
            row["case"] = c.case_no;
            row["rank"] = js(c.rank);
            row["extension"] = c.extension;
            json insts = json::array();
            for (const auto& in : c.instances) {
                json one;
                one["c2"] = js(in.c2);
                one["c3"] = js(in.c3);
                one["c2_M"] = js(in.c2_m);
                one["chern_F"] = js(in.chern_f.c);
                if (!in.note.empty()) one["note"] = in.note;
                insts.push_back(one);
            }
            row["instances"] = insts;
            arr.push_back(row);
        }
        o.result["cases"] = arr;
        o.provenance = {"unstable-quotient-case-split"};
    } else {
        throw std::invalid_argument("classify: unknown verb '" + verb +
                                    "' (filter|liaison|c3rule|bookkeeping|unstable)");
    }
    return o;
}

Outcome cmd_verify(const Flags&) {
    Outcome o;
    ThmMainReport rep = verify_thm_main();
    json arr = json::array();
    for (const auto& it : rep.items) {
        json row;
        row["item"] = it.index;
        row["n"] = it.n;
        row["name"] = it.name;
        row["rank"] = js(it.rank);
        row["c"] = js(it.chern.c);
        row["pass"] = it.pass;
        row["checks"] = it.checks;
        if (!it.failures.empty()) row["failures"] = it.failures;
        arr.push_back(row);
    }
    o.result["items"] = arr;
    o.result["all_pass"] = rep.all_pass;
    o.provenance = {"classification-regression"};
    o.exit_code = rep.all_pass ? 0 : 1;
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    static const std::map<std::string, std::function<Outcome(const Flags&)>> commands = {
        {"chern", cmd_chern},       {"pfun", cmd_pfun},   {"chi", cmd_chi},
        {"congr", cmd_congr},       {"bott", cmd_bott},   {"spectrum", cmd_spectrum},
        {"h1", cmd_h1},             {"monad", cmd_monad}, {"omega", cmd_omega},
        {"classify", cmd_classify}, {"verify", cmd_verify},
    };

    if (args.empty()) {
        err << "usage: pnbundles <chern|pfun|chi|congr|bott|spectrum|h1|monad|omega|classify|verify> ...\n";
        return 64;
    }
    const std::string& command = args[0];
    auto it = commands.find(command);
    if (it == commands.end()) {
        err << "unknown subcommand '" << command << "'\n";
        return 64;
    }

    std::string format = "json";
    if (const char* env = std::getenv("PNB_FORMAT")) format = env;

    try {
        Flags flags(std::vector<std::string>(args.begin() + 1, args.end()));
        if (auto fmt = flags.get("format")) format = *fmt;
        if (format != "json" && format != "table")
            throw std::invalid_argument("--format: expected json or table");

        Outcome o = it->second(flags);
        json envelope;
        envelope["command"] = command;
        envelope["inputs"] = o.inputs;
        envelope["result"] = o.result;
        envelope["provenance"] = o.provenance;
        if (format == "json") {
            out << envelope.dump(2) << "\n";
        } else {
            render_value(out, "", envelope["result"]);
        }
        return o.exit_code;
    } catch (const std::exception& e) {
        json envelope;
        envelope["command"] = command;
        envelope["error"] = e.what();
        out << envelope.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace pnb::cli
