// permpat.cpp
// Command-line front end. Subcommands cover avoider counting, inversion
// triangles, the red-blue coloring trace, bound formulas, the partition
// bijections in both directions, the lemma/conjecture check harnesses, and
// column polynomiality reports. Output is CSV for tables and JSON for
// reports; identical inputs produce byte-identical output regardless of the
// worker count.
//
// Exit codes: 0 success, 2 usage or input error, 3 a check found violations.

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "permpat/asymptotics.hpp"
#include "permpat/bounds.hpp"
#include "permpat/coloring.hpp"
#include "permpat/count.hpp"
#include "permpat/enumeration.hpp"
#include "permpat/partitions.hpp"
#include "permpat/perm.hpp"

using json = nlohmann::ordered_json;
using namespace permpat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;

std::string values_string(const Perm& pi, const IndexSet& I) {
    std::vector<int> vals;
    vals.reserve(I.indices.size());
    for (int i : I.indices) vals.push_back(pi.at(i));
    std::string s;
    if (pi.size() <= 9) {
        for (int v : vals) s.push_back(static_cast<char>('0' + v));
    } else {
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(vals[i]);
        }
    }
    return s;
}

json triangle_to_json(const InvTriangle& t) {
    json rows = json::array();
    for (int n = 1; n <= t.n_max; ++n) {
        json row = json::array();
        for (int k = 0; k < t.row_width(n); ++k) row.push_back(t.at(n, k).str());
        rows.push_back(std::move(row));
    }
    json out;
    out["schema"] = 1;
    out["pattern"] = t.pattern.str();
    out["nmax"] = t.n_max;
    if (t.k_cap) out["kmax"] = *t.k_cap;
    out["rows"] = std::move(rows);
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Applies fn to every permutation of length 1..n_max, in lexicographic
// order per length.
void for_all_perms_up_to(int n_max, const std::function<void(const Perm&)>& fn) {
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        do {
            fn(Perm(std::span<const int>(v)));
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

std::vector<PatternTriple> default_triples() {
    const Perm e;
    const Perm one = Perm::parse("1");
    const Perm id2 = Perm::parse("12");
    return {
        {one, one, one}, {one, e, one}, {id2, one, one}, {one, one, id2}, {e, one, one},
    };
}

struct CommonFlags {
    std::string format;  // "", "csv", or "json"
    int jobs = 0;
    int split_depth = 4;

    EnumOptions enum_opts() const {
        EnumOptions o;
        o.jobs = jobs;
        o.split_depth = split_depth;
        return o;
    }
    bool want_json(bool json_default) const {
        if (format.empty()) return json_default;
        return format == "json";
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", flags.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--split-depth", flags.split_depth, "prefix depth where the search splits into tasks")
        ->check(CLI::PositiveNumber);
}

int run_count(const std::string& pattern_text, int n, const CommonFlags& flags) {
    const Perm pattern = Perm::parse(pattern_text);
    const Count c = count_avoiders(pattern, n, flags.enum_opts());
    if (flags.want_json(false)) {
        json out;
        out["schema"] = 1;
        out["pattern"] = pattern.str();
        out["n"] = n;
        out["count"] = c.str();
        emit(out);
    } else {
        std::cout << "n,count\n" << n << "," << c.str() << "\n";
    }
    return kExitOk;
}

int run_triangle(const std::string& pattern_text, int n_max, int k_max, const CommonFlags& flags) {
    const Perm pattern = Perm::parse(pattern_text);
    EnumOptions opts = flags.enum_opts();
    if (k_max >= 0) opts.k_cap = k_max;
    const InvTriangle t = inversion_triangle(pattern, n_max, opts);
    if (flags.want_json(false))
        emit(triangle_to_json(t));
    else
        write_triangle_csv(std::cout, t);
    return kExitOk;
}

int run_color(const std::string& perm_text, const std::string& sigma, const std::string& tau,
              const std::string& rho_text, const CommonFlags& flags) {
    const Perm pi = Perm::parse(perm_text);
    const PatternTriple t{Perm::parse(sigma), Perm::parse(tau), Perm::parse(rho_text)};
    const ColoringCheck chk = check_coloring_lemma(pi, t);
    if (flags.want_json(true)) {
        json out;
        out["schema"] = 1;
        out["perm"] = pi.str();
        out["composite"] = chk.composite.str();
        out["red_pattern"] = chk.red_pattern.str();
        out["blue_pattern"] = chk.blue_pattern.str();
        out["coloring"] = chk.coloring.render();
        out["red_values"] = values_string(pi, chk.coloring.red);
        out["blue_values"] = values_string(pi, chk.coloring.blue);
        out["red_positions"] = chk.coloring.red.indices;
        out["blue_positions"] = chk.coloring.blue.indices;
        out["composite_avoided"] = chk.composite_avoided;
        out["pass"] = chk.pass();
        emit(out);
    } else {
        std::cout << "coloring,red_values,blue_values\n"
                  << chk.coloring.render() << "," << values_string(pi, chk.coloring.red) << ","
                  << values_string(pi, chk.coloring.blue) << "\n";
    }
    return kExitOk;
}

int emit_bound(const std::string& formula, const BoundValue& bv, const CommonFlags& flags,
               json extra = json::object()) {
    if (flags.want_json(true)) {
        json out;
        out["schema"] = 1;
        out["formula"] = formula;
        out["value"] = static_cast<double>(bv.value);
        out["derivation"] = bv.derivation;
        for (auto& [k, v] : extra.items()) out[k] = v;
        emit(out);
    } else {
        std::ostringstream os;
        os.precision(15);
        os << static_cast<double>(bv.value);
        std::cout << "formula,value\n" << formula << "," << os.str() << "\n";
    }
    return kExitOk;
}

json fit_to_json(const PolyFit& fit) {
    json f;
    f["degree"] = fit.degree;
    json coeffs = json::array();
    for (const Rational& c : fit.coefficients) coeffs.push_back(c.str());
    f["coefficients"] = coeffs;
    f["polynomial"] = fit.poly_str();
    f["stabilization_point"] = fit.stabilization_point;
    return f;
}

int run_poly(const std::string& pattern_text, int k, int n_max, int window, const CommonFlags& flags) {
    const ProfileReport rep = verify_profile(Perm::parse(pattern_text), k, n_max, window, flags.enum_opts());
    json out;
    out["schema"] = 1;
    out["pattern"] = rep.pattern.str();
    out["k"] = k;
    out["nmax"] = n_max;
    json col = json::array();
    for (const Count& c : rep.column) col.push_back(c.str());
    out["column"] = col;
    json exp;
    switch (rep.expectation.pattern_class) {
        case PatternClass::identity_pattern: exp["class"] = "identity-pattern"; break;
        case PatternClass::fibonacci: exp["class"] = "fibonacci"; break;
        case PatternClass::non_fibonacci: exp["class"] = "non-fibonacci"; break;
    }
    exp["pattern_inversions"] = rep.expectation.pattern_inversions;
    if (rep.expectation.eventually_zero) {
        exp["expected_degree"] = "eventually-zero";
        exp["zero_threshold"] = rep.expectation.zero_threshold;
    } else if (rep.expectation.degree) {
        exp["expected_degree"] = *rep.expectation.degree;
    }
    if (rep.expectation.leading) exp["expected_leading"] = rep.expectation.leading->str();
    exp["note"] = rep.expectation.note;
    out["expectation"] = exp;
    if (rep.fit) out["fit"] = fit_to_json(*rep.fit);
    switch (rep.verdict) {
        case ProfileVerdict::matched: out["verdict"] = "matched"; break;
        case ProfileVerdict::mismatched: out["verdict"] = "mismatched"; break;
        case ProfileVerdict::not_applicable: out["verdict"] = "not-applicable"; break;
    }
    out["detail"] = rep.detail;
    emit(out);
    return rep.verdict == ProfileVerdict::mismatched ? kExitCheckFailed : kExitOk;
}

int run_mahonian(int n, int k, const CommonFlags& flags) {
    const int top = n * (n - 1) / 2;
    std::vector<std::pair<int, Count>> rows;
    if (k >= 0)
        rows.emplace_back(k, mahonian_count(n, k));
    else
        for (int j = 0; j <= top; ++j) rows.emplace_back(j, mahonian_count(n, j));
    if (flags.want_json(false)) {
        json out;
        out["schema"] = 1;
        out["n"] = n;
        json arr = json::array();
        for (auto& [j, c] : rows) arr.push_back(c.str());
        out["counts"] = arr;
        emit(out);
    } else {
        std::cout << "n,k,count\n";
        for (auto& [j, c] : rows) std::cout << n << "," << j << "," << c.str() << "\n";
    }
    return kExitOk;
}

// --- check harnesses --------------------------------------------------------

int finish_check(const std::string& name, bool ok, json detail, const CommonFlags& flags) {
    if (flags.want_json(true)) {
        json out;
        out["schema"] = 1;
        out["check"] = name;
        out["pass"] = ok;
        out["detail"] = std::move(detail);
        emit(out);
    } else {
        std::cout << "check,pass\n" << name << "," << (ok ? "1" : "0") << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int check_red_blue(int n_max, const CommonFlags& flags) {
    json triples = json::array();
    bool all_ok = true;
    for (const PatternTriple& t : default_triples()) {
        long long tested = 0, red_bad = 0, blue_bad = 0;
        for_all_perms_up_to(n_max, [&](const Perm& pi) {
            const ColoringCheck chk = check_coloring_lemma(pi, t);
            ++tested;
            if (!chk.red_ok) ++red_bad;
            if (chk.composite_avoided && !chk.blue_ok) ++blue_bad;
        });
        json row;
        row["sigma"] = t.sigma.str();
        row["tau"] = t.tau.str();
        row["rho"] = t.rho.str();
        row["permutations"] = tested;
        row["red_violations"] = red_bad;
        row["blue_violations"] = blue_bad;
        triples.push_back(row);
        all_ok = all_ok && red_bad == 0 && blue_bad == 0;
    }
    json detail;
    detail["nmax"] = n_max;
    detail["triples"] = triples;
    return finish_check("red-blue", all_ok, detail, flags);
}

int check_comp_inv(int n_max, const CommonFlags& flags) {
    long long tested = 0, bad = 0;
    for_all_perms_up_to(n_max, [&](const Perm& pi) {
        ++tested;
        if (inversions(pi) < pi.size() - static_cast<int>(components(pi).size())) ++bad;
    });
    json detail;
    detail["nmax"] = n_max;
    detail["permutations"] = tested;
    detail["violations"] = bad;
    return finish_check("comp-inv", bad == 0, detail, flags);
}

int check_inv_monotone_cmd(const std::string& pattern_text, int n_max, const CommonFlags& flags) {
    const MonotoneReport rep = check_inv_monotone(Perm::parse(pattern_text), n_max, flags.enum_opts());
    json viols = json::array();
    for (const MonotoneViolation& v : rep.violations) {
        json row;
        row["n"] = v.n;
        row["k"] = v.k;
        row["count_at_n"] = v.at_n.str();
        row["count_at_n_plus_1"] = v.at_next.str();
        viols.push_back(row);
    }
    json detail;
    detail["pattern"] = rep.pattern.str();
    detail["nmax"] = n_max;
    detail["violations"] = viols;
    return finish_check("inv-monotone", rep.monotone(), detail, flags);
}

int check_partition_bounds(int p_max, int q_max, const CommonFlags& flags) {
    int p_bad = 0, q_bad = 0;
    for (int k = 1; k <= p_max; ++k)
        if (!partition_bound_holds(k)) ++p_bad;
    for (int k = 1; k <= q_max; ++k)
        if (!q_bound_holds(k)) ++q_bad;
    json detail;
    detail["p_range"] = p_max;
    detail["q_range"] = q_max;
    detail["p_violations"] = p_bad;
    detail["q_violations"] = q_bad;
    return finish_check("partition-bounds", p_bad == 0 && q_bad == 0, detail, flags);
}

int check_convolution(const std::string& sigma, const std::string& tau, const std::string& rho_text,
                      int n_max, const CommonFlags& flags) {
    const PatternTriple t{Perm::parse(sigma), Perm::parse(tau), Perm::parse(rho_text)};
    const Perm composite = composite_pattern(t);
    const Perm red = red_part_pattern(t);
    const Perm blue = blue_part_pattern(t);
    std::vector<Count> a, b;
    for (int n = 0; n <= n_max; ++n) {
        a.push_back(count_avoiders(red, n, flags.enum_opts()));
        b.push_back(count_avoiders(blue, n, flags.enum_opts()));
    }
    json rows = json::array();
    bool ok = true;
    for (int n = 0; n <= n_max; ++n) {
        const Count actual = count_avoiders(composite, n, flags.enum_opts());
        const Count bound = merge_convolution_bound(a, b, n);
        if (actual > bound) ok = false;
        json row;
        row["n"] = n;
        row["count"] = actual.str();
        row["bound"] = bound.str();
        rows.push_back(row);
    }
    json detail;
    detail["composite"] = composite.str();
    detail["red_pattern"] = red.str();
    detail["blue_pattern"] = blue.str();
    detail["rows"] = rows;
    return finish_check("convolution", ok, detail, flags);
}

// --- bijections ---------------------------------------------------------------

int run_biject_132(const std::string& perm_text, const std::string& partition_text, int n,
                   const CommonFlags& flags) {
    json out;
    out["schema"] = 1;
    out["bijection"] = "132";
    if (!perm_text.empty()) {
        const Perm pi = Perm::parse(perm_text);
        const Partition lambda = partition_of_132_avoider(pi);
        out["perm"] = pi.str();
        out["partition"] = lambda.str();
    } else {
        const Partition lambda = Partition::parse(partition_text);
        const Perm pi = perm_132_from_partition(lambda, n);
        out["partition"] = lambda.str();
        out["n"] = n;
        out["perm"] = pi.str();
    }
    if (flags.want_json(true))
        emit(out);
    else
        std::cout << "perm,partition\n"
                  << out["perm"].get<std::string>() << "," << out["partition"].get<std::string>() << "\n";
    return kExitOk;
}

int run_biject_1324(const std::string& perm_text, const std::string& lambda_text,
                    const std::string& mu_text, int n, const CommonFlags& flags) {
    json out;
    out["schema"] = 1;
    out["bijection"] = "1324";
    if (!perm_text.empty()) {
        const Perm pi = Perm::parse(perm_text);
        const PartitionPair pair = bijection_1324_forward(pi);
        out["perm"] = pi.str();
        out["lambda"] = pair.lambda.str();
        out["mu"] = pair.mu.str();
    } else {
        const PartitionPair pair{Partition::parse(lambda_text), Partition::parse(mu_text)};
        const Perm pi = bijection_1324_inverse(pair, n);
        out["lambda"] = pair.lambda.str();
        out["mu"] = pair.mu.str();
        out["n"] = n;
        out["perm"] = pi.str();
    }
    if (flags.want_json(true))
        emit(out);
    else
        std::cout << "perm,lambda,mu\n"
                  << out["perm"].get<std::string>() << "," << out["lambda"].get<std::string>() << ","
                  << out["mu"].get<std::string>() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permpat: pattern-avoiding permutation enumeration, bijections, and growth-rate bounds"};
    app.require_subcommand(1);

    CommonFlags flags;
    int exit_code = kExitOk;

    // count
    {
        auto* cmd = app.add_subcommand("count", "number of pattern avoiders of a given length");
        auto pattern = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        cmd->add_option("--pattern", *pattern, "pattern, e.g. 1324")->required();
        cmd->add_option("--n", *n, "permutation length")->required()->check(CLI::NonNegativeNumber);
        add_common(cmd, flags);
        cmd->callback([&flags, &exit_code, pattern, n] { exit_code = run_count(*pattern, *n, flags); });
    }
    // triangle
    {
        auto* cmd = app.add_subcommand("triangle", "inversion triangle of a pattern's avoiders");
        auto pattern = std::make_shared<std::string>();
        auto nmax = std::make_shared<int>(0);
        auto kmax = std::make_shared<int>(-1);
        cmd->add_option("--pattern", *pattern)->required();
        cmd->add_option("--nmax", *nmax, "largest length")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--kmax", *kmax, "cap on inversion count (prunes the search)");
        add_common(cmd, flags);
        cmd->callback([&flags, &exit_code, pattern, nmax, kmax] {
            exit_code = run_triangle(*pattern, *nmax, *kmax, flags);
        });
    }
    // color
    {
        auto* cmd = app.add_subcommand("color", "red-blue coloring trace for a pattern triple");
        auto perm = std::make_shared<std::string>();
        auto sigma = std::make_shared<std::string>("1");
        auto tau = std::make_shared<std::string>("1");
        auto rho_text = std::make_shared<std::string>("1");
        cmd->add_option("--perm", *perm)->required();
        cmd->add_option("--sigma", *sigma, "first pattern part, '-' for empty");
        cmd->add_option("--tau", *tau, "middle pattern part, '-' for empty");
        cmd->add_option("--rho", *rho_text, "last pattern part, '-' for empty");
        add_common(cmd, flags);
        cmd->callback([&flags, &exit_code, perm, sigma, tau, rho_text] {
            exit_code = run_color(*perm, *sigma, *tau, *rho_text, flags);
        });
    }
    // bound
    {
        auto* cmd = app.add_subcommand("bound", "growth-rate bound formulas");
        cmd->require_subcommand(1);
        auto sizes = std::make_shared<std::vector<int>>();
        auto* layered = cmd->add_subcommand("layered", "closed-form layered bound");
        layered->add_option("sizes", *sizes, "layer sizes")->required();
        add_common(layered, flags);
        layered->callback([&flags, &exit_code, sizes] {
            exit_code = emit_bound("layered", layered_bound(LayerComposition{*sizes}), flags);
        });
        auto rsizes = std::make_shared<std::vector<int>>();
        auto* rec = cmd->add_subcommand("recursive", "layered bound via its recursion");
        rec->add_option("sizes", *rsizes, "layer sizes")->required();
        add_common(rec, flags);
        rec->callback([&flags, &exit_code, rsizes] {
            exit_code = emit_bound("layered-recursive", layered_bound_recursive(LayerComposition{*rsizes}), flags);
        });
        auto ab = std::make_shared<std::vector<double>>();
        auto* merge = cmd->add_subcommand("merge", "(sqrt(a)+sqrt(b))^2");
        merge->add_option("rates", *ab, "two growth rates")->expected(2)->required();
        add_common(merge, flags);
        merge->callback([&flags, &exit_code, ab] {
            exit_code = emit_bound("merge", sqrt_merge_combine((*ab)[0], (*ab)[1]), flags);
        });
        auto* rho_cmd = cmd->add_subcommand("rho", "the constant e^(pi*sqrt(2/3))");
        add_common(rho_cmd, flags);
        rho_cmd->callback([&flags, &exit_code] {
            BoundValue bv{rho(), "e^(pi*sqrt(2/3))"};
            exit_code = emit_bound("rho", bv, flags);
        });
        auto cn = std::make_shared<int>(0);
        auto* cond = cmd->add_subcommand("conditional", "column-monotonicity-conditional bound for 1324");
        cond->add_option("--n", *cn)->required()->check(CLI::PositiveNumber);
        add_common(cond, flags);
        cond->callback([&flags, &exit_code, cn] {
            json extra;
            extra["nth_root"] = static_cast<double>(expl(conditional_1324_bound_log(*cn) / *cn));
            exit_code = emit_bound("conditional-1324", conditional_1324_bound(*cn), flags, extra);
        });
        auto sn = std::make_shared<int>(0);
        auto* s132 = cmd->add_subcommand("s132", "columnwise bound on 132 avoiders");
        s132->add_option("--n", *sn)->required()->check(CLI::PositiveNumber);
        add_common(s132, flags);
        s132->callback([&flags, &exit_code, sn] {
            json extra;
            const long long m = static_cast<long long>(*sn) * (*sn - 1) / 2;
            if (m <= kPartitionCountMax) extra["column_sum"] = s132_display_bound(*sn).str();
            extra["nth_root"] = static_cast<double>(expl(s132_bound_log(*sn) / *sn));
            exit_code = emit_bound("s132", s132_bound(*sn), flags, extra);
        });
        auto qk = std::make_shared<int>(0);
        auto* qb = cmd->add_subcommand("q", "(k+1)*rho^sqrt(2k) pairs-of-partitions bound");
        qb->add_option("--k", *qk)->required()->check(CLI::NonNegativeNumber);
        add_common(qb, flags);
        qb->callback([&flags, &exit_code, qk] { exit_code = emit_bound("q", q_bound(*qk), flags); });
    }
    // biject
    {
        auto* cmd = app.add_subcommand("biject", "partition bijections, both directions");
        cmd->require_subcommand(1);
        auto* b132 = cmd->add_subcommand("132", "132-avoiders <-> partitions");
        auto perm = std::make_shared<std::string>();
        auto part = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto* popt = b132->add_option("--perm", *perm, "forward: a 132-avoiding permutation");
        auto* lopt = b132->add_option("--partition", *part, "inverse: a partition, e.g. 5+4+4+1+1");
        b132->add_option("--n", *n, "inverse: target length");
        popt->excludes(lopt);
        add_common(b132, flags);
        b132->callback([&flags, &exit_code, perm, part, n] {
            if (perm->empty() && part->empty())
                throw CLI::ValidationError("biject 132", "need --perm or --partition");
            exit_code = run_biject_132(*perm, *part, *n, flags);
        });
        auto* b1324 = cmd->add_subcommand("1324", "low-inversion 1324-avoiders <-> partition pairs");
        auto perm2 = std::make_shared<std::string>();
        auto lam = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        auto n2 = std::make_shared<int>(0);
        auto* popt2 = b1324->add_option("--perm", *perm2, "forward: a 1324-avoider with inv < n-1");
        auto* lopt2 = b1324->add_option("--lambda", *lam, "inverse: first partition");
        b1324->add_option("--mu", *mu, "inverse: second partition");
        b1324->add_option("--n", *n2, "inverse: target length");
        popt2->excludes(lopt2);
        add_common(b1324, flags);
        b1324->callback([&flags, &exit_code, perm2, lam, mu, n2] {
            if (perm2->empty() && lam->empty())
                throw CLI::ValidationError("biject 1324", "need --perm or --lambda/--mu/--n");
            exit_code = run_biject_1324(*perm2, *lam, *mu, *n2, flags);
        });
    }
    // check
    {
        auto* cmd = app.add_subcommand("check", "exhaustive lemma/conjecture harnesses");
        cmd->require_subcommand(1);
        auto rb_n = std::make_shared<int>(6);
        auto* rb = cmd->add_subcommand("red-blue", "coloring split properties, all permutations");
        rb->add_option("--nmax", *rb_n)->check(CLI::PositiveNumber);
        add_common(rb, flags);
        rb->callback([&flags, &exit_code, rb_n] { exit_code = check_red_blue(*rb_n, flags); });
        auto ci_n = std::make_shared<int>(8);
        auto* ci = cmd->add_subcommand("comp-inv", "inversions >= length - components");
        ci->add_option("--nmax", *ci_n)->check(CLI::PositiveNumber);
        add_common(ci, flags);
        ci->callback([&flags, &exit_code, ci_n] { exit_code = check_comp_inv(*ci_n, flags); });
        auto im_pat = std::make_shared<std::string>();
        auto im_n = std::make_shared<int>(9);
        auto* im = cmd->add_subcommand("inv-monotone", "columns weakly increase down the triangle");
        im->add_option("--pattern", *im_pat)->required();
        im->add_option("--nmax", *im_n)->check(CLI::PositiveNumber);
        add_common(im, flags);
        im->callback([&flags, &exit_code, im_pat, im_n] {
            exit_code = check_inv_monotone_cmd(*im_pat, *im_n, flags);
        });
        auto pmax = std::make_shared<int>(1000);
        auto qmax = std::make_shared<int>(500);
        auto* pb = cmd->add_subcommand("partition-bounds", "p(k) and |Q(k)| against their rho bounds");
        pb->add_option("--pmax", *pmax)->check(CLI::PositiveNumber);
        pb->add_option("--qmax", *qmax)->check(CLI::PositiveNumber);
        add_common(pb, flags);
        pb->callback([&flags, &exit_code, pmax, qmax] {
            exit_code = check_partition_bounds(*pmax, *qmax, flags);
        });
        auto cv_sigma = std::make_shared<std::string>("1");
        auto cv_tau = std::make_shared<std::string>("1");
        auto cv_rho = std::make_shared<std::string>("1");
        auto cv_n = std::make_shared<int>(9);
        auto* cv = cmd->add_subcommand("convolution", "composite avoiders dominated by the merge bound");
        cv->add_option("--sigma", *cv_sigma);
        cv->add_option("--tau", *cv_tau);
        cv->add_option("--rho", *cv_rho);
        cv->add_option("--nmax", *cv_n)->check(CLI::PositiveNumber);
        add_common(cv, flags);
        cv->callback([&flags, &exit_code, cv_sigma, cv_tau, cv_rho, cv_n] {
            exit_code = check_convolution(*cv_sigma, *cv_tau, *cv_rho, *cv_n, flags);
        });
    }
    // poly
    {
        auto* cmd = app.add_subcommand("poly", "column polynomiality profile and verdict");
        auto pattern = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        auto nmax = std::make_shared<int>(12);
        auto window = std::make_shared<int>(3);
        cmd->add_option("--pattern", *pattern)->required();
        cmd->add_option("--k", *k, "inversion count")->required()->check(CLI::NonNegativeNumber);
        cmd->add_option("--nmax", *nmax)->check(CLI::PositiveNumber);
        cmd->add_option("--window", *window)->check(CLI::Range(2, 10));
        add_common(cmd, flags);
        cmd->callback([&flags, &exit_code, pattern, k, nmax, window] {
            exit_code = run_poly(*pattern, *k, *nmax, *window, flags);
        });
    }
    // mahonian
    {
        auto* cmd = app.add_subcommand("mahonian", "permutations counted by inversions");
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(-1);
        cmd->add_option("--n", *n)->required()->check(CLI::NonNegativeNumber);
        cmd->add_option("--k", *k, "single inversion count (default: the whole row)");
        add_common(cmd, flags);
        cmd->callback([&flags, &exit_code, n, k] { exit_code = run_mahonian(*n, *k, flags); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
