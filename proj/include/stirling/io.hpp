#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "stirling/enumerators.hpp"
#include "stirling/polynomial.hpp"
#include "stirling/sp_code.hpp"
#include "stirling/structures.hpp"

namespace stirling {

enum class ObjectKind { stirling, code, tree, riordan, dumont, matching, plane_tree };

/// "stirling", "code", "tree", "riordan", "dumont", "matching", "plane-tree".
ObjectKind object_from_name(std::string_view name);
std::string_view name_of(ObjectKind kind);

using AnyObject = std::variant<StirlingPermutation, SPCode, TernaryTree, RiordanWord, DumontWord, PerfectMatching,
                               PlaneIncreasingTree>;

ObjectKind kind_of(const AnyObject& object);

/// Compact JSON:
///   stirling, riordan, dumont: [1,2,2,1]
///   code: [[0,0],[1,3]]
///   tree: {"label":1,"slots":[child|null, child|null, child|null]}
///   plane-tree: {"label":1,"children":[...]}
///   matching: [[1,3],[2,4]]
std::string dump_object(const AnyObject& object);

/// Throws InvalidObject on malformed JSON or an invalid object. `arity`
/// applies to Stirling words.
AnyObject parse_object(ObjectKind kind, std::string_view json_text, int arity = 2);

/// Moves between the (2n-1)!!-families through the code: Stirling words
/// by peeling, trees by slot position, Dumont words by value history,
/// Riordan words entrywise from Dumont words, matchings from Riordan words.
/// Plane trees only convert to themselves.
AnyObject convert(const AnyObject& object, ObjectKind to);

/// {"vars":[...],"terms":[{"coef":"-3","exps":[1,0]}]}; coefficients are
/// decimal strings.
std::string dump_polynomial(const Polynomial& p);
Polynomial parse_polynomial_json(std::string_view json_text);

std::string dump_report(const VerificationReport& report);

/// Header i,j,k,gamma.
std::string gamma3_csv(const GammaTable3& table);
/// Header i1,...,in,gamma.
std::string gammaK_csv(const GammaTableK& table, int n);
std::string dump_gamma3(const GammaTable3& table);
std::string dump_gammaK(const GammaTableK& table);

}  // namespace stirling
