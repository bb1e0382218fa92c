#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace exfc {

/// A C/C++ type in the grammar subset this tool understands: qualified
/// named types, template argument lists, pointers, references, and
/// function pointers carried as opaque text.
///
/// Function-pointer types are stored with base = "fnptr(<original text>)"
/// and render back to the original text.
struct CTypeRef {
    std::string base;                    // "int", "std::basic_filebuf", "fnptr(...)"
    std::vector<CTypeRef> template_args;
    int pointer_depth = 0;
    bool is_reference = false;
    bool is_rvalue_reference = false;    // refines is_reference (T&&)
    bool is_const = false;
    bool is_volatile = false;
    bool is_restrict = false;

    bool is_function_pointer() const {
        return base.rfind("fnptr(", 0) == 0;
    }
    /// Raw declarator text of a function-pointer type (without the wrapper).
    std::string fnptr_text() const;

    bool operator==(const CTypeRef&) const = default;

    static CTypeRef named(std::string b) {
        CTypeRef t; t.base = std::move(b); return t;
    }
};

enum class TypeLang { C, Cpp };

/// Parse a C/C++ type string (the clang qualType / demangler rendering
/// subset). Throws Error on text that is outside the supported grammar.
CTypeRef parse_c_type(std::string_view text);

/// Render back to C text. `lang` controls the restrict spelling
/// (restrict in C, __restrict in C++).
std::string render_c_type(const CTypeRef& t, TypeLang lang = TypeLang::Cpp);

/// True if an identifier looks like a template placeholder (_Upper...),
/// or is listed in `params`.
bool is_placeholder_name(std::string_view name, const std::vector<std::string>& params = {});

/// True if no base in the type tree is a template placeholder.
bool is_concrete_type(const CTypeRef& t, const std::vector<std::string>& params = {});

/// Member typedef table: canonical "Context::name" -> underlying type text.
/// Contexts may be generic ("std::basic_ostream<_CharT, _Traits>"); lookups
/// against a concrete context unify the arguments and substitute.
class TypedefTable {
public:
    void add(const std::string& context, const std::string& name, const std::string& underlying);
    /// Resolve "<context>::<name>". Returns empty string when unknown.
    std::string resolve(const std::string& context, const std::string& name) const;
    bool empty() const { return entries_.empty(); }

    const std::map<std::string, std::string>& raw() const { return entries_; }
    void add_raw(const std::string& key, const std::string& underlying) { entries_[key] = underlying; }

private:
    // key: "<context-base>#<arity>::<name>" -> {context text, underlying}
    std::map<std::string, std::string> entries_;
};

struct CanonOptions {
    bool drop_toplevel_cv = false;          // by-value parameter position
    const TypedefTable* typedefs = nullptr; // member typedef expansion
};

/// Canonical comparison key for a type: whitespace-normalized, known std
/// aliases expanded, inline namespaces erased, defaulted template arguments
/// of well-known std templates completed, member typedefs resolved.
std::string canonical_type_key(const CTypeRef& t, const CanonOptions& opts = {});
std::string canonical_type_key(std::string_view text, const CanonOptions& opts = {});

/// Split a qualified name at its top-level "::" boundaries ("std::a<b::c>::d"
/// -> {"std","a<b::c>","d"}). Angle brackets are respected.
std::vector<std::string> split_qualified_name(std::string_view name);

/// Split "a, b<c, d>, e" at top-level commas.
std::vector<std::string> split_template_args(std::string_view args);

/// "std::basic_filebuf<char, traits>" -> {"std::basic_filebuf", {"char","traits"}}.
/// Types without arguments yield an empty argument list.
std::pair<std::string, std::vector<std::string>> split_template_name(std::string_view text);

} // namespace exfc
