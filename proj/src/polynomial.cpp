#include "bpo/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace bpo {

void Polynomial::ensure_var(int v) {
    while (static_cast<int>(names.size()) <= v)
        names.push_back("x" + std::to_string(names.size()));
}

void Polynomial::add_term(std::vector<int> vars, double coeff) {
    if (coeff == 0.0)
        return;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (int v : vars)
        ensure_var(v);
    if (vars.empty()) {
        constant += coeff;
        return;
    }
    auto it = terms.find(vars);
    if (it == terms.end()) {
        terms.emplace(std::move(vars), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0.0)
            terms.erase(it);
    }
}

double Polynomial::evaluate(const std::vector<int>& assignment) const {
    double value = constant;
    for (const auto& [mono, coeff] : terms) {
        bool active = true;
        for (int v : mono)
            if (!assignment[v]) {
                active = false;
                break;
            }
        if (active)
            value += coeff;
    }
    return value;
}

std::map<std::vector<std::string>, double> Polynomial::named_terms() const {
    std::map<std::vector<std::string>, double> out;
    for (const auto& [mono, coeff] : terms) {
        std::vector<std::string> key;
        key.reserve(mono.size());
        for (int v : mono)
            key.push_back(names[v]);
        std::sort(key.begin(), key.end());
        out[key] = coeff;
    }
    return out;
}

double Instance::evaluate(const std::vector<int>& assignment) const {
    double value = constant;
    for (NodeId v = 0; v < hypergraph.node_count(); ++v)
        if (assignment[v])
            value += node_profit[v];
    for (EdgeId e = 0; e < hypergraph.edge_count(); ++e) {
        bool active = true;
        for (NodeId v : hypergraph.edge(e))
            if (!assignment[v]) {
                active = false;
                break;
            }
        if (active)
            value += edge_profit[e];
    }
    return value;
}

Instance linearize(const Polynomial& poly, std::string name) {
    const int n = poly.var_count();
    std::vector<NodeSet> edge_sets;
    std::vector<double> edge_profit;
    std::vector<double> node_profit(n, 0.0);
    for (const auto& [mono, coeff] : poly.terms) {
        if (mono.size() == 1) {
            node_profit[mono[0]] += coeff;
        } else {
            edge_sets.push_back(mono);
            edge_profit.push_back(coeff);
        }
    }
    return Instance{Hypergraph(n, std::move(edge_sets)), std::move(node_profit),
                    std::move(edge_profit), poly.constant, poly.sense, std::move(name)};
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

Polynomial parse_polynomial(const std::string& text) {
    Polynomial poly;
    std::map<std::string, int> var_ids;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool sense_read = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        std::string first;
        if (!(ls >> first))
            continue;
        if (!sense_read) {
            if (first == "min")
                poly.sense = Sense::minimize;
            else if (first == "max")
                poly.sense = Sense::maximize;
            else
                throw UnknownSense("line " + std::to_string(lineno) +
                                   ": expected 'min' or 'max', got '" + first + "'");
            sense_read = true;
            continue;
        }
        if (first == "c") {
            double value;
            if (!(ls >> value))
                throw SyntaxError("line " + std::to_string(lineno) + ": malformed constant");
            poly.constant += value;
            continue;
        }
        double coeff;
        try {
            std::size_t used = 0;
            coeff = std::stod(first, &used);
            if (used != first.size())
                throw std::invalid_argument(first);
        } catch (const std::exception&) {
            throw SyntaxError("line " + std::to_string(lineno) + ": bad coefficient '" + first +
                              "'");
        }
        std::vector<int> vars;
        std::string tok;
        while (ls >> tok) {
            auto [it, inserted] = var_ids.try_emplace(tok, static_cast<int>(var_ids.size()));
            if (inserted) {
                poly.ensure_var(it->second);
                poly.names[it->second] = tok;
            }
            vars.push_back(it->second);
        }
        if (vars.empty())
            throw SyntaxError("line " + std::to_string(lineno) + ": monomial with no variables");
        poly.add_term(std::move(vars), coeff);
    }
    if (!sense_read)
        throw UnknownSense("missing sense line");
    return poly;
}

namespace {

std::string format_coeff(double c) {
    if (c == std::floor(c) && std::abs(c) < 1e15) {
        std::ostringstream os;
        os << static_cast<long long>(c);
        return os.str();
    }
    std::ostringstream os;
    os.precision(17);
    os << c;
    return os.str();
}

} // namespace

std::string write_polynomial(const Polynomial& poly) {
    std::ostringstream os;
    os << (poly.sense == Sense::minimize ? "min" : "max") << '\n';
    if (poly.constant != 0.0)
        os << "c " << format_coeff(poly.constant) << '\n';
    for (const auto& [mono, coeff] : poly.terms) {
        os << format_coeff(coeff);
        for (int v : mono)
            os << ' ' << poly.names[v];
        os << '\n';
    }
    return os.str();
}

Polynomial read_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SyntaxError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_polynomial(buf.str());
}

void write_polynomial_file(const Polynomial& poly, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw SyntaxError("cannot open '" + path + "' for writing");
    out << write_polynomial(poly);
}

} // namespace bpo
