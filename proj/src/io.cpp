#include "boxfree/io.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace boxfree {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw parse_error("bad " + what + ": '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

FieldHandle parse_field_descriptor(const std::string& text, std::uint64_t max_order) {
    const std::string s = trim(text);
    if (s.rfind("GF(", 0) != 0) throw parse_error("field descriptor must start with GF(");
    const auto caret = s.find('^', 3);
    const auto close = s.find(')', 3);
    if (caret == std::string::npos || close == std::string::npos || caret > close) {
        throw parse_error("malformed field descriptor: '" + s + "'");
    }
    const std::uint64_t p = parse_u64(s.substr(3, caret - 3), "characteristic");
    const std::uint64_t r = parse_u64(s.substr(caret + 1, close - caret - 1), "degree");
    if (r < 1 || r > kMaxExtensionDegree) throw parse_error("degree out of range");

    if (close + 1 == s.size()) {
        return make_field(p, static_cast<std::uint32_t>(r), max_order);
    }
    if (s[close + 1] != '/') throw parse_error("expected '/' before modulus coefficients");
    const auto parts = split(s.substr(close + 2), ',');
    if (parts.size() != r + 1) {
        throw parse_error("modulus needs " + std::to_string(r + 1) + " coefficients");
    }
    std::vector<std::uint32_t> modulus;
    modulus.reserve(parts.size());
    for (const auto& c : parts) {
        modulus.push_back(static_cast<std::uint32_t>(parse_u64(trim(c), "modulus coefficient")));
    }
    try {
        return make_field_with_modulus(p, std::move(modulus), max_order);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("invalid field descriptor: ") + e.what());
    }
}

void write_polynomial(std::ostream& os, const Polynomial& f) {
    const FieldCtx& ctx = f.ctx();
    const bool canonical =
        ctx.modulus() == canonical_modulus(ctx.characteristic(), ctx.degree());
    if (canonical) {
        os << "field GF(" << ctx.characteristic() << "^" << ctx.degree() << ")\n";
    } else {
        os << "field " << field_descriptor(ctx) << "\n";
    }
    os << "arity " << f.arity() << "\n";
    for (const auto& [m, coeff] : f.terms()) {
        os << coeff << " : ";
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (i > 0) os << ",";
            os << m.exponent(i);
        }
        os << "\n";
    }
}

PolynomialFile read_polynomial(std::istream& is, std::uint64_t max_order) {
    FieldHandle field;
    std::size_t arity = 0;
    std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> raw_terms;

    std::string line;
    while (std::getline(is, line)) {
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.rfind("field ", 0) == 0) {
            if (field) throw parse_error("duplicate field header");
            field = parse_field_descriptor(s.substr(6), max_order);
            continue;
        }
        if (s.rfind("arity ", 0) == 0) {
            if (arity != 0) throw parse_error("duplicate arity header");
            arity = parse_u64(trim(s.substr(6)), "arity");
            if (arity < 1) throw parse_error("arity must be >= 1");
            continue;
        }
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw parse_error("term line needs 'coeff : exponents'");
        const std::uint64_t coeff = parse_u64(trim(s.substr(0, colon)), "coefficient");
        const auto exp_strings = split(trim(s.substr(colon + 1)), ',');
        std::vector<std::uint64_t> exps;
        exps.reserve(exp_strings.size());
        for (const auto& e : exp_strings) exps.push_back(parse_u64(trim(e), "exponent"));
        raw_terms.emplace_back(std::move(exps), coeff);
    }
    if (!field) throw parse_error("missing field header");
    if (arity == 0) throw parse_error("missing arity header");

    Polynomial poly(*field, arity);
    for (auto& [exps, coeff] : raw_terms) {
        if (exps.size() != arity) throw parse_error("term arity mismatch");
        if (coeff >= field->order()) throw parse_error("coefficient encoding out of range");
        poly.add_term(Monomial(std::move(exps)), field->element(coeff));
    }
    return {std::move(field), std::move(poly)};
}

void write_edge_list(std::ostream& os, const Hypergraph& h) {
    const std::size_t r = h.arity();
    os << "# r=" << r << " parts=";
    for (std::size_t i = 0; i < r; ++i) {
        if (i > 0) os << ",";
        os << h.part_size(i);
    }
    os << "\n";

    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(h.num_edges());
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        const auto edge = h.edge(e);
        std::vector<std::uint32_t> labels(r);
        for (std::size_t i = 0; i < r; ++i) {
            labels[i] = h.label(i, edge[i]);
        }
        rows.push_back(std::move(labels));
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < r; ++i) {
            if (i > 0) os << " ";
            os << (i + 1) << ":" << row[i];
        }
        os << "\n";
    }
}

EdgeListFile read_edge_list(std::istream& is) {
    std::string line;
    bool have_header = false;
    std::size_t r = 0;
    std::vector<std::uint64_t> declared;
    std::vector<std::vector<std::uint32_t>> raw_edges;

    while (std::getline(is, line)) {
        const std::string s = trim(line);
        if (s.empty()) continue;
        if (s[0] == '#') {
            if (have_header) continue;  // later comments are free-form
            const auto r_pos = s.find("r=");
            const auto parts_pos = s.find("parts=");
            if (r_pos == std::string::npos || parts_pos == std::string::npos) continue;
            const auto r_end = s.find_first_of(" \t", r_pos);
            r = parse_u64(s.substr(r_pos + 2, r_end - r_pos - 2), "arity header");
            if (r < 1 || r > 31) throw parse_error("arity out of range");
            for (const auto& n : split(trim(s.substr(parts_pos + 6)), ',')) {
                declared.push_back(parse_u64(trim(n), "part size"));
            }
            if (declared.size() != r) throw parse_error("parts= must list r sizes");
            have_header = true;
            continue;
        }
        if (!have_header) throw parse_error("edge before the '# r=... parts=...' header");
        std::istringstream tokens(s);
        std::string token;
        std::vector<std::uint32_t> labels;
        while (tokens >> token) {
            const auto colon = token.find(':');
            if (colon == std::string::npos) {
                throw parse_error("vertex token must be partIndex:elementEncoding");
            }
            const std::uint64_t part = parse_u64(token.substr(0, colon), "part index");
            if (part != labels.size() + 1) {
                throw parse_error("part indices must run 1.." + std::to_string(r) +
                                  " in order");
            }
            const std::uint64_t enc = parse_u64(token.substr(colon + 1), "element encoding");
            if (enc > UINT32_MAX) throw parse_error("element encoding out of range");
            labels.push_back(static_cast<std::uint32_t>(enc));
        }
        if (labels.size() != r) throw parse_error("edge must have exactly r vertices");
        raw_edges.push_back(std::move(labels));
    }
    if (!have_header) throw parse_error("missing '# r=... parts=...' header");

    // Parts carry the labels that occur; isolated declared vertices have no
    // bearing on edges or box detection.
    std::vector<std::set<std::uint32_t>> seen(r);
    for (const auto& e : raw_edges) {
        for (std::size_t i = 0; i < r; ++i) seen[i].insert(e[i]);
    }
    std::vector<std::vector<std::uint32_t>> labels(r);
    std::vector<std::map<std::uint32_t, std::uint32_t>> index(r);
    for (std::size_t i = 0; i < r; ++i) {
        labels[i].assign(seen[i].begin(), seen[i].end());
        for (std::size_t v = 0; v < labels[i].size(); ++v) {
            index[i][labels[i][v]] = static_cast<std::uint32_t>(v);
        }
        if (labels[i].size() > declared[i]) {
            throw parse_error("part " + std::to_string(i + 1) +
                              " uses more labels than its declared size");
        }
    }
    Hypergraph graph(std::move(labels));
    std::vector<std::uint32_t> idx(r);
    for (const auto& e : raw_edges) {
        for (std::size_t i = 0; i < r; ++i) idx[i] = index[i][e[i]];
        graph.add_edge(idx);
    }
    return {std::move(declared), std::move(graph)};
}

nlohmann::ordered_json to_json(const InstanceReport& rep) {
    nlohmann::ordered_json j;
    j["p"] = rep.p;
    j["r"] = rep.r;
    j["field"] = rep.field;
    j["n_per_part"] = rep.n_per_part;
    j["num_vertices"] = rep.num_vertices;
    j["num_edges"] = rep.num_edges;
    j["expected_edges"] = rep.expected_edges;
    switch (rep.box_free) {
        case BoxVerdict::kFree: j["box_free"] = true; break;
        case BoxVerdict::kWitnessFound: j["box_free"] = false; break;
        case BoxVerdict::kSkippedBudget: j["box_free"] = "skipped-budget"; break;
    }
    j["density_ok"] = rep.density_ok;
    j["density_exponent"] = to_string(rep.density_exponent);
    j["density_ratio"] = rep.density_ratio;
    j["mode"] = rep.mode == BuildMode::kFast ? "fast" : "naive";
    return j;
}

nlohmann::ordered_json to_json(const RoteReport& rep) {
    nlohmann::ordered_json j;
    j["p"] = rep.p;
    j["n"] = rep.n;
    j["zero_count"] = rep.zero_count;
    j["expected_zero_count"] = rep.expected_zero_count;
    j["shape_ok"] = rep.shape_ok;
    j["univariate_degree"] = rep.univariate_degree;
    j["ratio"] = rep.ratio;
    return j;
}

nlohmann::ordered_json to_json(const std::vector<ExponentRecord>& table) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rec : table) {
        nlohmann::ordered_json j;
        j["r"] = rec.r;
        j["erdos_two"] = to_string(rec.erdos_two);
        j["cpz"] = to_string(rec.cpz);
        j["construction"] = to_string(rec.construction);
        j["matches_cpz"] = rec.matches_cpz;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string render_bounds_table(const std::vector<ExponentRecord>& table) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "r" << std::setw(16) << "erdos(2,..,2)"
       << std::setw(12) << "cpz" << std::setw(14) << "construction"
       << "matches_cpz" << "\n";
    for (const auto& rec : table) {
        os << std::left << std::setw(4) << rec.r << std::setw(16) << to_string(rec.erdos_two)
           << std::setw(12) << to_string(rec.cpz) << std::setw(14)
           << to_string(rec.construction) << (rec.matches_cpz ? "yes" : "no") << "\n";
    }
    return os.str();
}

}  // namespace boxfree
