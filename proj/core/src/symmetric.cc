/*
 * Copyright 2026 The SCP-ABE Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "scpabe/symmetric.h"

#include <openssl/core_names.h>
#include <openssl/evp.h>
#include <openssl/kdf.h>
#include <openssl/params.h>

#include <memory>
#include <string>

#include "scpabe/errors.h"

namespace scpabe {

namespace {

struct KdfFree {
  void operator()(EVP_KDF* k) const { EVP_KDF_free(k); }
  void operator()(EVP_KDF_CTX* c) const { EVP_KDF_CTX_free(c); }
};
struct CipherFree {
  void operator()(EVP_CIPHER_CTX* c) const { EVP_CIPHER_CTX_free(c); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherFree>;

CipherCtx new_cipher(const ContentKey& key, const Nonce& nonce, bool encrypt) {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx ||
      EVP_CipherInit_ex(ctx.get(), EVP_chacha20_poly1305(), nullptr, nullptr,
                        nullptr, encrypt ? 1 : 0) != 1 ||
      EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_SET_IVLEN,
                          static_cast<int>(nonce.size()), nullptr) != 1 ||
      EVP_CipherInit_ex(ctx.get(), nullptr, nullptr, key.data(), nonce.data(),
                        encrypt ? 1 : 0) != 1) {
    throw Error("aead: cipher initialisation failed");
  }
  return ctx;
}

void feed_aad(EVP_CIPHER_CTX* ctx, std::span<const std::uint8_t> aad) {
  int len = 0;
  if (!aad.empty() &&
      EVP_CipherUpdate(ctx, nullptr, &len, aad.data(),
                       static_cast<int>(aad.size())) != 1) {
    throw Error("aead: associated data rejected");
  }
}

}  // namespace

ContentKey hkdf_sha256(std::span<const std::uint8_t> ikm, std::string_view info) {
  std::unique_ptr<EVP_KDF, KdfFree> kdf(EVP_KDF_fetch(nullptr, "HKDF", nullptr));
  if (!kdf) throw Error("hkdf: unavailable");
  std::unique_ptr<EVP_KDF_CTX, KdfFree> ctx(EVP_KDF_CTX_new(kdf.get()));
  if (!ctx) throw Error("hkdf: context allocation failed");
  std::string digest = "SHA256";
  std::string info_copy(info);
  Bytes key_copy(ikm.begin(), ikm.end());
  OSSL_PARAM params[] = {
      OSSL_PARAM_construct_utf8_string(OSSL_KDF_PARAM_DIGEST, digest.data(), 0),
      OSSL_PARAM_construct_octet_string(OSSL_KDF_PARAM_KEY, key_copy.data(),
                                        key_copy.size()),
      OSSL_PARAM_construct_octet_string(OSSL_KDF_PARAM_INFO, info_copy.data(),
                                        info_copy.size()),
      OSSL_PARAM_construct_end(),
  };
  ContentKey out{};
  if (EVP_KDF_derive(ctx.get(), out.data(), out.size(), params) != 1) {
    throw Error("hkdf: derivation failed");
  }
  return out;
}

Sealed aead_seal(const ContentKey& key, const Nonce& nonce,
                 std::span<const std::uint8_t> aad,
                 std::span<const std::uint8_t> plaintext) {
  CipherCtx ctx = new_cipher(key, nonce, true);
  feed_aad(ctx.get(), aad);
  Sealed out;
  out.ciphertext.resize(plaintext.size());
  int len = 0;
  if (!plaintext.empty() &&
      EVP_CipherUpdate(ctx.get(), out.ciphertext.data(), &len, plaintext.data(),
                       static_cast<int>(plaintext.size())) != 1) {
    throw Error("aead: encryption failed");
  }
  int tail = 0;
  if (EVP_CipherFinal_ex(ctx.get(), out.ciphertext.data() + len, &tail) != 1 ||
      EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_GET_TAG,
                          static_cast<int>(out.tag.size()), out.tag.data()) != 1) {
    throw Error("aead: finalisation failed");
  }
  return out;
}

Bytes aead_open(const ContentKey& key, const Nonce& nonce,
                std::span<const std::uint8_t> aad,
                std::span<const std::uint8_t> ciphertext, const Tag& tag) {
  CipherCtx ctx = new_cipher(key, nonce, false);
  feed_aad(ctx.get(), aad);
  Bytes plain(ciphertext.size());
  int len = 0;
  if (!ciphertext.empty() &&
      EVP_CipherUpdate(ctx.get(), plain.data(), &len, ciphertext.data(),
                       static_cast<int>(ciphertext.size())) != 1) {
    throw AuthenticationError("aead: decryption failed");
  }
  Tag tag_copy = tag;
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_SET_TAG,
                          static_cast<int>(tag_copy.size()), tag_copy.data()) != 1) {
    throw Error("aead: cannot set tag");
  }
  int tail = 0;
  if (EVP_CipherFinal_ex(ctx.get(), plain.data() + len, &tail) != 1) {
    throw AuthenticationError("aead: authentication tag mismatch");
  }
  return plain;
}

}  // namespace scpabe
