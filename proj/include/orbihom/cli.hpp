#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbihom/generators.hpp"
#include "orbihom/homology.hpp"
#include "orbihom/io.hpp"
#include "orbihom/subdivision.hpp"
#include "orbihom/verify.hpp"

namespace orbihom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1; // validation / verification failure
inline constexpr int kExitUsage = 2;   // usage / parse error

/// Ordered key/value result block with a stable textual form:
///   result.begin / "key: value" lines / result.end
struct ResultDocument {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }

    std::string to_text() const
    {
        std::string out = "result.begin\n";
        for (const auto& [k, v] : fields)
            out += k + ": " + v + "\n";
        out += "result.end\n";
        return out;
    }

    static ResultDocument from_text(const std::string& text)
    {
        ResultDocument doc;
        std::istringstream in(text);
        std::string line;
        bool inside = false;
        while (std::getline(in, line)) {
            if (line == "result.begin") {
                inside = true;
                continue;
            }
            if (line == "result.end")
                break;
            if (!inside)
                continue;
            std::size_t sep = line.find(": ");
            if (sep == std::string::npos)
                fail(ErrorCode::ParseError, "malformed result line '" + line + "'");
            doc.add(line.substr(0, sep), line.substr(sep + 2));
        }
        return doc;
    }
};

namespace detail {

inline int exit_code_for(const Error& e)
{
    switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidSpec:
            return kExitUsage;
        default:
            return kExitFailure;
    }
}

struct LoadedInput {
    NamedComplex nc;
    std::string descriptor;
};

/// Inputs are either a file path or "example:<spec>".
inline LoadedInput load_input(const std::string& input)
{
    LoadedInput li;
    if (input.rfind("example:", 0) == 0) {
        const std::string spec_text = input.substr(8);
        ExampleSpec spec = parse_example_spec(spec_text);
        li.nc.complex = generate(spec);
        li.nc.names = default_names(li.nc.complex);
        li.descriptor = "example:" + format_example_spec(spec);
        return li;
    }
    std::ifstream in(input);
    if (!in)
        fail(ErrorCode::ParseError, "cannot open '" + input + "'");
    li.nc = read_complex(in);
    li.descriptor = input;
    return li;
}

inline TheorySelector parse_theory(const std::string& text)
{
    if (text == "wt")
        return TheorySelector::wt();
    if (text == "st")
        return TheorySelector::st();
    if (text.rfind("st-stage=", 0) == 0) {
        const std::string arg = text.substr(9);
        if (arg == "inf")
            return TheorySelector::st_stage(std::nullopt);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorCode::InvalidSpec, "bad stage '" + arg + "'");
        return TheorySelector::st_stage(Integer(arg));
    }
    fail(ErrorCode::InvalidSpec, "unknown theory '" + text + "' (wt | st | st-stage=N | st-stage=inf)");
}

inline CoefficientRing parse_coeff(const std::string& text)
{
    if (text == "Z")
        return CoefficientRing::integers();
    if (text == "Q")
        return CoefficientRing::rationals();
    if (text.rfind("Fp=", 0) == 0)
        return CoefficientRing::prime_field(Integer(text.substr(3)));
    if (text.rfind("Zm=", 0) == 0)
        return CoefficientRing::mod_ring(Integer(text.substr(3)));
    fail(ErrorCode::InvalidSpec, "unknown coefficients '" + text + "' (Z | Q | Fp=<p> | Zm=<m>)");
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        fail(ErrorCode::ParseError, "cannot write '" + path + "'");
    f << text;
}

} // namespace detail

inline int cmd_validate(const std::string& input, std::ostream& out, std::ostream& err)
{
    try {
        detail::LoadedInput li = detail::load_input(input);
        const WeightedComplex& K = li.nc.complex;
        out << "validate: " << li.descriptor << "\n";
        out << "vertices: " << K.vertex_count() << "\n";
        out << "dimension: " << K.dim() << "\n";
        for (int d = 0; d <= K.dim(); ++d) {
            ClassCounts c = class_counts(K, d);
            out << "dim " << d << ": " << K.simplex_count(d) << " simplices (regular=" << c.regular
                << " semi-regular=" << c.semi_regular << " singular=" << c.singular << ")\n";
        }
        out << "face-divisibility: ok\n";
        out << "divisibly-weighted: " << (K.divisibly_weighted() ? "true" : "false") << "\n";
        out << "ok\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return detail::exit_code_for(e);
    }
}

inline int cmd_homology(const std::string& input, const std::string& theory_text,
                        const std::string& coeff_text, bool witnesses, std::ostream& out,
                        std::ostream& err)
{
    try {
        const auto t0 = std::chrono::steady_clock::now();
        detail::LoadedInput li = detail::load_input(input);
        TheorySelector theory = detail::parse_theory(theory_text);
        CoefficientRing ring = detail::parse_coeff(coeff_text);
        const WeightedComplex& K = li.nc.complex;

        HomologyProfile p;
        const bool integral = ring.kind == CoefficientRing::Kind::Integers;
        if (integral)
            p = profile_for(K, theory, witnesses);
        else
            p = homology_with_coefficients(K, theory, ring);

        out << "homology of " << li.descriptor << " (theory " << theory.name() << ", coefficients "
            << ring.name() << ")\n";
        for (int n = 0; n <= K.dim(); ++n)
            out << "h[" << n << "] = " << format_group(p.group(n)) << "\n";

        ResultDocument doc;
        doc.add("schema", "orbihom.homology.v1");
        doc.add("input", li.descriptor);
        doc.add("theory", theory.name());
        doc.add("coefficients", ring.name());
        doc.add("divisibly_weighted", K.divisibly_weighted() ? "true" : "false");
        long reg = 0, semi = 0, sing = 0;
        for (int d = 0; d <= K.dim(); ++d) {
            ClassCounts c = class_counts(K, d);
            reg += c.regular;
            semi += c.semi_regular;
            sing += c.singular;
        }
        doc.add("regular", std::to_string(reg));
        doc.add("semi_regular", std::to_string(semi));
        doc.add("singular", std::to_string(sing));
        doc.add("dim", std::to_string(K.dim()));
        for (int n = 0; n <= K.dim(); ++n)
            doc.add("h" + std::to_string(n), format_group(p.group(n)));
        if (witnesses && p.has_witnesses)
            for (int n = 0; n <= K.dim(); ++n)
                for (int j = 0; j < p.witness_chains[n].cols(); ++j)
                    doc.add("witness.h" + std::to_string(n) + "." + std::to_string(j),
                            format_chain(p.witness_chains[n].column(j), p.basis_labels[n], &li.nc.names));
        out << doc.to_text();

        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        out << "time: " << ms.count() << " ms\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return detail::exit_code_for(e);
    }
}

inline int cmd_subdivide(const std::string& input, int times, bool check, const std::string& out_path,
                         std::ostream& out, std::ostream& err)
{
    try {
        if (times < 1)
            fail(ErrorCode::InvalidSpec, "--times must be >= 1");
        detail::LoadedInput li = detail::load_input(input);
        ComplexPtr cur = share(li.nc.complex);
        std::vector<std::string> names = li.nc.names.empty() ? default_names(*cur) : li.nc.names;
        bool all_ok = true;
        for (int m = 1; m <= times; ++m) {
            SubdivisionRecord rec = barycentric_subdivide(cur);
            if (check) {
                bool ok_wt = verify_subdivision_invariance(cur, TheorySelector::wt());
                bool ok_st = verify_subdivision_invariance(cur, TheorySelector::st());
                out << "# check Sd^" << m << ": wt " << (ok_wt ? "ok" : "FAIL") << ", st "
                    << (ok_st ? "ok" : "FAIL") << "\n";
                all_ok = all_ok && ok_wt && ok_st;
            }
            std::vector<std::string> next_names(rec.barycenter_of.size());
            for (std::size_t b = 0; b < rec.barycenter_of.size(); ++b) {
                const Simplex& s = rec.barycenter_of[b];
                if (s.size() == 1) {
                    next_names[b] = names[s[0]];
                } else {
                    std::string nm = "(";
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        if (i)
                            nm += ".";
                        nm += names[s[i]];
                    }
                    next_names[b] = nm + ")";
                }
            }
            cur = rec.result;
            names = std::move(next_names);
        }
        detail::write_output(out_path, to_text(*cur, &names), out);
        return all_ok ? kExitOk : kExitFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return detail::exit_code_for(e);
    }
}

inline int cmd_product(const std::string& input_a, const std::string& input_b,
                       const std::string& out_path, std::ostream& out, std::ostream& err)
{
    try {
        detail::LoadedInput a = detail::load_input(input_a);
        detail::LoadedInput b = detail::load_input(input_b);
        WeightedComplex P = cartesian_product(a.nc.complex, b.nc.complex);

        // Product ids follow the weight-sorted orders of the factors.
        std::vector<std::string> names_a = a.nc.names.empty() ? default_names(a.nc.complex) : a.nc.names;
        std::vector<std::string> names_b = b.nc.names.empty() ? default_names(b.nc.complex) : b.nc.names;
        std::vector<VertexId> ord_a = vertices_by_weight(a.nc.complex);
        std::vector<VertexId> ord_b = vertices_by_weight(b.nc.complex);
        std::vector<std::string> names(P.vertex_count());
        for (std::size_t i = 0; i < ord_a.size(); ++i)
            for (std::size_t j = 0; j < ord_b.size(); ++j)
                names[i * ord_b.size() + j] = names_a[ord_a[i]] + "x" + names_b[ord_b[j]];

        detail::write_output(out_path, to_text(P, &names), out);
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return detail::exit_code_for(e);
    }
}

inline int cmd_verify(const std::string& suite, std::uint64_t seed, int cases, std::ostream& out,
                      std::ostream& err)
{
    try {
        VerifyOptions opt;
        opt.seed = seed;
        opt.cases = cases;
        opt.threads = orbihom::detail::env_threads();
        out << "verify: suite=" << suite << " seed=" << seed << " cases=" << cases << "\n";
        std::vector<SuiteResult> results = run_suites(suite, opt);
        bool ok = true;
        for (const SuiteResult& r : results) {
            out << "suite " << r.suite << ": " << (r.cases - r.failures) << "/" << r.cases << " pass\n";
            ok = ok && r.ok();
        }
        for (const SuiteResult& r : results)
            for (const std::string& note : r.notes)
                out << "failure [" << r.suite << "] " << note << "\n";
        out << "RESULT: " << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? kExitOk : kExitFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return detail::exit_code_for(e);
    }
}

inline int cmd_example(const std::string& spec_text, const std::string& out_path, std::ostream& out,
                       std::ostream& err)
{
    try {
        ExampleSpec spec = parse_example_spec(spec_text);
        WeightedComplex K = generate(spec);
        std::string text = "# " + format_example_spec(spec) + "\n" + to_text(K);
        detail::write_output(out_path, text, out);
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return detail::exit_code_for(e);
    }
}

} // namespace orbihom::cli
