// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_STEMMER_HPP_
#define LRA_STEMMER_HPP_

#include <string>
#include <string_view>

namespace lra {

/// Porter stemmer (the classic reference algorithm, including the two
/// adjustments in the reference C implementation: "bli" -> "ble" and
/// "logi" -> "log", and words of length <= 2 left unchanged).
///
/// Expects a lowercased token. Tokens containing anything outside a-z
/// (digits, non-ASCII bytes) are returned unchanged. Deterministic:
/// the same input always yields the same stem.
std::string porter_stem(std::string_view word);

}  // namespace lra

#endif  // LRA_STEMMER_HPP_
