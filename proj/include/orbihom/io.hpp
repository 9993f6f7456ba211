#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbihom/complex.hpp"
#include "orbihom/smith.hpp"

namespace orbihom {

/// Complex plus the human names of its vertices.  Names map to dense ids in
/// first-appearance order.
struct NamedComplex {
    WeightedComplex complex;
    std::vector<std::string> names;
    std::map<std::string, VertexId> ids;

    std::string name_of(VertexId v) const
    {
        if (v >= 0 && v < static_cast<VertexId>(names.size()))
            return names[v];
        return "v" + std::to_string(v);
    }
};

inline std::vector<std::string> default_names(const WeightedComplex& K)
{
    std::vector<std::string> out;
    for (VertexId v : K.vertices())
        out.push_back("v" + std::to_string(v));
    return out;
}

/// Text format, one complex per file:
///   vertex <name> <weight>
///   simplex <name> <name> ...          (maximal simplices)
///   weight <name> <name> ... = <int>   (explicit simplex weights)
///   # comment
inline NamedComplex read_complex(std::istream& in)
{
    NamedComplex nc;
    std::map<VertexId, Integer> vertex_weights;
    std::vector<Simplex> maximal;
    std::map<Simplex, Integer> explicit_weights;

    auto parse_fail = [](int line, const std::string& msg) {
        fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
    };

    std::string line;
    int lineno = 0;
    bool saw_anything = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word))
            continue;
        saw_anything = true;
        if (word == "vertex") {
            std::string name, weight;
            if (!(ls >> name >> weight))
                parse_fail(lineno, "expected 'vertex <name> <weight>'");
            if (nc.ids.count(name))
                parse_fail(lineno, "duplicate vertex '" + name + "'");
            if (weight.find_first_not_of("0123456789") != std::string::npos || weight.empty())
                parse_fail(lineno, "bad weight '" + weight + "'");
            Integer w(weight);
            if (w < 1)
                parse_fail(lineno, "vertex weight must be >= 1");
            VertexId id = static_cast<VertexId>(nc.names.size());
            nc.ids[name] = id;
            nc.names.push_back(name);
            vertex_weights[id] = w;
            std::string extra;
            if (ls >> extra)
                parse_fail(lineno, "trailing tokens after vertex declaration");
        } else if (word == "simplex") {
            Simplex s;
            std::string name;
            while (ls >> name) {
                auto it = nc.ids.find(name);
                if (it == nc.ids.end())
                    parse_fail(lineno, "unknown vertex '" + name + "'");
                s.push_back(it->second);
            }
            if (s.empty())
                parse_fail(lineno, "empty simplex");
            Simplex canon = s;
            if (canonicalize(canon) == 0)
                parse_fail(lineno, "repeated vertex in simplex");
            maximal.push_back(canon);
        } else if (word == "weight") {
            std::vector<std::string> toks;
            std::string tok;
            while (ls >> tok)
                toks.push_back(tok);
            if (toks.size() < 3 || toks[toks.size() - 2] != "=")
                parse_fail(lineno, "expected 'weight <name>... = <int>'");
            const std::string& wtok = toks.back();
            if (wtok.find_first_not_of("0123456789") != std::string::npos || wtok.empty())
                parse_fail(lineno, "bad weight '" + wtok + "'");
            Simplex s;
            for (std::size_t i = 0; i + 2 < toks.size(); ++i) {
                auto it = nc.ids.find(toks[i]);
                if (it == nc.ids.end())
                    parse_fail(lineno, "unknown vertex '" + toks[i] + "'");
                s.push_back(it->second);
            }
            if (canonicalize(s) == 0)
                parse_fail(lineno, "repeated vertex in weight line");
            explicit_weights[s] = Integer(wtok);
        } else {
            parse_fail(lineno, "unknown directive '" + word + "'");
        }
    }
    if (!saw_anything)
        fail(ErrorCode::ParseError, "empty input");
    if (vertex_weights.empty())
        fail(ErrorCode::ParseError, "no vertices declared");

    nc.complex = build_complex(vertex_weights, maximal, explicit_weights);
    return nc;
}

/// Writes maximal simplices plus explicit weight lines wherever a simplex
/// weight deviates from the lcm of its vertex weights, so reading the output
/// back reproduces the complex exactly.
inline void write_complex(std::ostream& out, const WeightedComplex& K,
                          const std::vector<std::string>* names = nullptr)
{
    auto name_of = [&](VertexId v) {
        if (names && v >= 0 && v < static_cast<VertexId>(names->size()))
            return (*names)[v];
        return "v" + std::to_string(v);
    };
    for (VertexId v : K.vertices())
        out << "vertex " << name_of(v) << " " << K.vertex_weight(v) << "\n";
    for (const Simplex& s : K.maximal_simplices()) {
        if (s.size() == 1)
            continue; // vertices are already declared
        out << "simplex";
        for (VertexId v : s)
            out << " " << name_of(v);
        out << "\n";
    }
    for (int d = 1; d <= K.dim(); ++d)
        for (const Simplex& s : K.simplices(d)) {
            Integer l = 1;
            for (VertexId v : s)
                l = lcm(l, K.vertex_weight(v));
            if (l != K.weight(s)) {
                out << "weight";
                for (VertexId v : s)
                    out << " " << name_of(v);
                out << " = " << K.weight(s) << "\n";
            }
        }
}

inline std::string to_text(const WeightedComplex& K, const std::vector<std::string>* names = nullptr)
{
    std::ostringstream os;
    write_complex(os, K, names);
    return os.str();
}

/// "Z^r + Z/d1 + Z/d2", "Z", "Z/4", or "0".
inline std::string format_group(const HomologyGroup& g)
{
    std::string out;
    if (g.rank == 1)
        out = "Z";
    else if (g.rank > 1)
        out = "Z^" + std::to_string(g.rank);
    for (const Integer& d : g.torsion) {
        if (!out.empty())
            out += " + ";
        out += "Z/" + d.get_str();
    }
    return out.empty() ? "0" : out;
}

/// Formats a chain vector over a labeled basis, e.g. "3*[v1,u1] - 1*[v2,u1]".
inline std::string format_chain(const std::vector<Integer>& coeffs, const std::vector<Simplex>& basis,
                                const std::vector<std::string>* names = nullptr)
{
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) == 0)
            continue;
        Integer a = coeffs[i];
        if (out.empty()) {
            if (sgn(a) < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (sgn(a) < 0) ? " - " : " + ";
            if (sgn(a) < 0)
                a = -a;
        }
        out += a.get_str() + "*[";
        const Simplex& s = basis[i];
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j)
                out += ",";
            out += (names && s[j] < static_cast<VertexId>(names->size())) ? (*names)[s[j]]
                                                                          : "v" + std::to_string(s[j]);
        }
        out += "]";
    }
    return out.empty() ? "0" : out;
}

} // namespace orbihom
