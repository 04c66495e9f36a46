#ifndef BOXFREE_IO_HPP
#define BOXFREE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "boxfree/bounds.hpp"
#include "boxfree/construction.hpp"
#include "boxfree/field.hpp"
#include "boxfree/hypergraph.hpp"
#include "boxfree/poly.hpp"

namespace boxfree {

/// Parses "GF(p^r)" (canonical modulus) or "GF(p^r)/c0,c1,...,cr".
FieldHandle parse_field_descriptor(const std::string& text,
                                   std::uint64_t max_order = kDefaultMaxFieldOrder);

/// Polynomial text format: `field` and `arity` header lines, then one term
/// per line as `coeff : e1,e2,...,ek` with the coefficient in canonical
/// integer encoding. Lines starting with '#' are comments.
void write_polynomial(std::ostream& os, const Polynomial& f);

struct PolynomialFile {
    FieldHandle field;
    Polynomial poly;
};
PolynomialFile read_polynomial(std::istream& is,
                               std::uint64_t max_order = kDefaultMaxFieldOrder);

/// Edge-list text format: a header `# r=<r> parts=<n1,...,nr>` followed by
/// one edge per line, each vertex rendered as `partIndex:elementEncoding`
/// with 1-based part indices. Edges are written sorted by label tuple.
void write_edge_list(std::ostream& os, const Hypergraph& h);

struct EdgeListFile {
    std::vector<std::uint64_t> declared_sizes;
    Hypergraph graph;  // parts hold the labels that actually occur
};
EdgeListFile read_edge_list(std::istream& is);

nlohmann::ordered_json to_json(const InstanceReport& report);
nlohmann::ordered_json to_json(const RoteReport& report);
nlohmann::ordered_json to_json(const std::vector<ExponentRecord>& table);

std::string render_bounds_table(const std::vector<ExponentRecord>& table);

}  // namespace boxfree

#endif
