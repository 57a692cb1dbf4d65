#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "xmodkit/cohomology.hpp"
#include "xmodkit/extension.hpp"
#include "xmodkit/prolongation.hpp"

namespace xmodkit {

/// Malformed JSON, a missing or mistyped field, or a dangling reference.
/// Distinct from Error, which reports objects that parse but do not validate.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ObjectKind { Group, Hom, CrossedModule, Kernel, PreProlongation, Module };
std::string_view to_string(ObjectKind kind);

/// A named collection of groups, homs, crossed modules, ζ-kernels,
/// pre-prolongations and modules. Objects are resolved lazily: parse()
/// checks the document shape and name uniqueness, the accessors build and
/// validate the requested object (throwing Error on validation failure and
/// ParseError on a bad reference).
class Manifest {
 public:
  static Manifest parse(std::string_view text);
  static Manifest load(std::filesystem::path const& path);

  std::string const& version() const noexcept { return version_; }
  std::optional<ObjectKind> kind_of(std::string const& name) const;

  FiniteGroup group(std::string const& name) const;
  GroupHom hom(std::string const& name) const;
  CrossedModule crossed_module(std::string const& name) const;
  AbstractZetaKernel kernel(std::string const& name) const;
  PreProlongation preprolongation(std::string const& name) const;
  ModulePtr module(std::string const& name) const;

 private:
  nlohmann::json const& entry(ObjectKind kind, std::string const& name) const;
  FiniteGroup group_ref(nlohmann::json const& ref, std::string const& where) const;
  GroupHom hom_ref(nlohmann::json const& ref, FiniteGroup const& source, FiniteGroup const& target,
                   std::string const& where) const;

  std::string version_;
  nlohmann::json doc_;
  std::map<std::string, ObjectKind> index_;
  mutable std::map<std::string, FiniteGroup> group_cache_;
};

/// Group description in the manifest format: {"table": [[...]]} plus labels
/// when present. Used for report payloads so they re-parse.
nlohmann::ordered_json group_to_json(FiniteGroup const& g);
/// Parses any inline group description that does not reference names.
FiniteGroup group_from_json(nlohmann::json const& j);

/// Sparse cochain: {"degree": n, "entries": [[[x1..xn], value], ...]} with
/// only nonzero values, in ascending tuple order.
nlohmann::ordered_json cochain_to_json(Cochain const& c);
Cochain cochain_from_json(nlohmann::json const& j, ModulePtr module);

}  // namespace xmodkit
