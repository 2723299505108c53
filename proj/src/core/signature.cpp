// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/core/signature.hpp"
#include "vtp/core/errors.hpp"

#include <sodium.h>

#include <mutex>

namespace vtp::core
{

namespace
{
void
ensureSodium()
{
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0)
            fail(Errc::IoError, "libsodium initialization failed");
    });
}
}

KeyPair
keygen(Rng& rng)
{
    ensureSodium();
    Bytes seed = rng.bytes(crypto_sign_SEEDBYTES);
    KeyPair kp;
    kp.publicKey.resize(crypto_sign_PUBLICKEYBYTES);
    kp.secretKey.resize(crypto_sign_SECRETKEYBYTES);
    crypto_sign_seed_keypair(kp.publicKey.data(), kp.secretKey.data(),
                             seed.data());
    return kp;
}

Bytes
sign(BytesView secretKey, BytesView msg)
{
    ensureSodium();
    if (secretKey.size() != crypto_sign_SECRETKEYBYTES)
        fail(Errc::BadEncoding, "secret key must be 64 bytes");
    Bytes sig(crypto_sign_BYTES);
    crypto_sign_detached(sig.data(), nullptr, msg.data(), msg.size(),
                         secretKey.data());
    return sig;
}

bool
verify(BytesView publicKey, BytesView msg, BytesView sig) noexcept
{
    if (sodium_init() < 0)
        return false;
    if (publicKey.size() != crypto_sign_PUBLICKEYBYTES ||
        sig.size() != crypto_sign_BYTES)
        return false;
    return crypto_sign_verify_detached(sig.data(), msg.data(), msg.size(),
                                       publicKey.data()) == 0;
}

}
