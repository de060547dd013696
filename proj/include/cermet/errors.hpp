#pragma once

#include <stdexcept>
#include <string>

namespace cermet {

enum class Errc {
    // field / code construction
    not_primitive,
    division_by_zero,
    too_many_channels,
    dependent_basis,
    singular,
    dimension_mismatch,
    // codec
    misaligned,
    missing_channel,
    duplicate_channel,
    batch_id_mismatch,
    bad_padding,
    // cipher
    entropy_unavailable,
    nonce_reuse,
    suite_mismatch,
    malformed_ciphertext,
    weak_shared_secret,
    // audit
    too_large,
    // wire / transport
    bad_magic,
    unsupported_version,
    truncated,
    malformed_header,
    timeout,
    // configuration / io
    bad_config,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cermet
