#pragma once

#include <stdexcept>
#include <string>

namespace exfc {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// elf-probe
struct MalformedElf : Error { using Error::Error; };
struct NoSymbolTables : Error { using Error::Error; };

// libdb
struct MalformedAstDump : Error { using Error::Error; };
struct NoLibraryForIsa : Error { using Error::Error; };
struct DuplicateManualEntry : Error { using Error::Error; };

// demangler
struct NotMangled : Error { using Error::Error; };
struct UnsupportedMangling : Error { using Error::Error; };

// completion
struct Unresolved : Error { using Error::Error; };
struct AmbiguousOverloads : Error { using Error::Error; };
struct MfcUnresolved : Error { using Error::Error; };
struct UnboundPlaceholder : Error { using Error::Error; };
struct NonConcreteType : Error { using Error::Error; };

// format analysis
struct BadFormat : Error {
    BadFormat(size_t position, const std::string& reason)
        : Error("bad format specifier at offset " + std::to_string(position) + ": " + reason),
          position(position), reason(reason) {}
    size_t position;
    std::string reason;
};

// emitters
struct EmitConflict : Error { using Error::Error; };

// lifted IR
struct IrParseError : Error { using Error::Error; };

} // namespace exfc
