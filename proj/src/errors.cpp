#include "cermet/errors.hpp"

namespace cermet {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_primitive: return "NotPrimitive";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::too_many_channels: return "TooManyChannels";
        case Errc::dependent_basis: return "DependentBasis";
        case Errc::singular: return "Singular";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::misaligned: return "Misaligned";
        case Errc::missing_channel: return "MissingChannel";
        case Errc::duplicate_channel: return "DuplicateChannel";
        case Errc::batch_id_mismatch: return "BatchIdMismatch";
        case Errc::bad_padding: return "BadPadding";
        case Errc::entropy_unavailable: return "EntropyUnavailable";
        case Errc::nonce_reuse: return "NonceReuse";
        case Errc::suite_mismatch: return "SuiteMismatch";
        case Errc::malformed_ciphertext: return "MalformedCiphertext";
        case Errc::weak_shared_secret: return "WeakSharedSecret";
        case Errc::too_large: return "TooLarge";
        case Errc::bad_magic: return "BadMagic";
        case Errc::unsupported_version: return "UnsupportedVersion";
        case Errc::truncated: return "Truncated";
        case Errc::malformed_header: return "MalformedHeader";
        case Errc::timeout: return "Timeout";
        case Errc::bad_config: return "BadConfig";
        case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace cermet
