#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubemedian/action.hpp"
#include "cubemedian/errors.hpp"
#include "cubemedian/fixtures.hpp"
#include "cubemedian/isometry.hpp"
#include "cubemedian/subalgebra.hpp"
#include "cubemedian/wallspace.hpp"

namespace cubemedian {

// Document parsing and canonical serialization (sorted keys, two-space
// indent, plain integer formatting). Grid coordinates must fit in 64 bits on
// the serialization boundary; internal arithmetic is unbounded.

Graph parse_graph_doc(const std::string& text);
std::string graph_doc(const Graph& g);

Wallspace parse_wallspace_doc(const std::string& text);
std::string wallspace_doc(const Wallspace& w);

struct SubalgebraDoc {
  std::variant<std::string, Graph> graph;  // path reference or inline graph
  std::vector<std::string> members;
};
SubalgebraDoc parse_subalgebra_doc(const std::string& text);

ProductComplexPtr parse_product_complex_doc(const std::string& text,
                                            const VerifyOptions& verify = {});
std::string product_complex_doc(const ProductComplex& pc);

ProductIsometry parse_isometry_doc(const std::string& text, ProductComplexPtr complex);
std::string isometry_doc(const ProductIsometry& iso);

AbelianAction parse_action_doc(const std::string& text, const VerifyOptions& verify = {});
std::string action_doc(const AbelianAction& a);

// {"map": {"v": "w", ...}} over a graph's vertex names.
std::vector<int> parse_vertex_map_doc(const std::string& text, const Graph& g);

// Output documents.
std::string wallspace_validation_doc(const Wallspace& w);
std::string cubulation_doc(const Wallspace& w, const CubulationResult& r);
std::string median_check_doc(const MedianGraph& g);
std::string median_check_failure_doc(const Graph& g, const NotMedianError& e);
std::string walls_doc(const Subalgebra& y, const std::vector<WallPartition>& induced,
                      const std::vector<WallPartition>& intrinsic, const AgreeVerdict& agree);
std::string classification_doc(const ProductIsometry& iso, const Classification& c);
std::string minset_doc(const ProductIsometry& iso, const MinsetReport& r);
std::string axis_doc(const ProductIsometry& iso, const AxisPath& a);
std::string subdivided_graph_doc(const MedianGraph& original, const Subdivision& sub);
std::string subdivided_product_doc(const SubdividedProduct& sub,
                                   const std::vector<ProductIsometry>& transported);
std::string factorization_doc(const MedianGraph& g, const Factorization& f);
std::string common_power_doc(const ProductIsometry& g, const CommonPowerResult& r);
std::string freeness_doc(const AbelianAction& a, const FreenessVerdict& v);
std::string norm_report_doc(const DiscreteNormReport& rep);
std::string norm_report_table(const DiscreteNormReport& rep);  // human-readable
std::string fixture_doc(const Fixture& f);
std::string paper_example_doc(const AbelianAction& a, const PaperExampleReport& rep);
std::string error_doc(const std::string& code, const std::string& message);

// Word lists for norm-check / freeness (array of {"gen": exponent} objects).
WordList parse_word_list(const std::string& text, const std::vector<std::string>& names);

}  // namespace cubemedian
