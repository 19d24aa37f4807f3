// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.
//
// Port of the reference Porter stemmer (M. Porter, "An algorithm for suffix
// stripping", Program 14(3), 1980). The state layout mirrors the reference C
// code: `len` is the live word length, `j` is the stem length set by the most
// recent successful suffix match. `j` is intentionally left stale after a
// failed match; step 1b and step 5 rely on that, exactly like the original.

#include "lra/stemmer.hpp"

#include <algorithm>

namespace lra {
namespace {

class Porter {
 public:
  explicit Porter(std::string_view word) : w_(word), len_(static_cast<int>(word.size())) {}

  std::string run() {
    if (len_ <= 2) return w_;
    step1ab();
    if (len_ > 0) step1c();
    step2();
    step3();
    step4();
    step5();
    return w_.substr(0, static_cast<std::size_t>(len_));
  }

 private:
  bool is_cons(int i) const {
    switch (w_[static_cast<std::size_t>(i)]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !is_cons(i - 1);
      default:
        return true;
    }
  }

  // Number of consonant-vowel sequences ("m" in the paper) in w[0, j).
  int measure() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i >= j_) return n;
      if (!is_cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i >= j_) return n;
        if (is_cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i >= j_) return n;
        if (!is_cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i < j_; ++i) {
      if (!is_cons(i)) return true;
    }
    return false;
  }

  bool double_cons(int i) const {
    if (i < 1) return false;
    if (w_[static_cast<std::size_t>(i)] != w_[static_cast<std::size_t>(i - 1)]) return false;
    return is_cons(i);
  }

  // consonant-vowel-consonant ending at i, where the final consonant is not
  // w, x or y. Used to restore a trailing e (hop -> hoping -> hope).
  bool cvc(int i) const {
    if (i < 2 || !is_cons(i) || is_cons(i - 1) || !is_cons(i - 2)) return false;
    char ch = w_[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    int l = static_cast<int>(s.size());
    if (l > len_) return false;
    if (std::string_view(w_).substr(static_cast<std::size_t>(len_ - l),
                                    static_cast<std::size_t>(l)) != s) {
      return false;
    }
    j_ = len_ - l;
    return true;
  }

  // Replaces the suffix matched by the last successful ends() with s.
  void set_to(std::string_view s) {
    int new_len = j_ + static_cast<int>(s.size());
    if (static_cast<int>(w_.size()) < new_len) w_.resize(static_cast<std::size_t>(new_len));
    std::copy(s.begin(), s.end(), w_.begin() + j_);
    len_ = new_len;
  }

  void replace_if_m(std::string_view s) {
    if (measure() > 0) set_to(s);
  }

  void chop(int n) { len_ -= n; }

  char at(int i) const { return w_[static_cast<std::size_t>(i)]; }

  void step1ab() {
    if (at(len_ - 1) == 's') {
      if (ends("sses")) {
        chop(2);
      } else if (ends("ies")) {
        set_to("i");
      } else if (at(len_ - 2) != 's') {
        chop(1);
      }
    }
    if (ends("eed")) {
      if (measure() > 0) chop(1);
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      len_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_cons(len_ - 1)) {
        char ch = at(len_ - 1);
        if (ch != 'l' && ch != 's' && ch != 'z') chop(1);
      } else if (measure() == 1 && cvc(len_ - 1)) {
        set_to("e");  // j_ == len_ here, so this appends
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) w_[static_cast<std::size_t>(len_ - 1)] = 'i';
  }

  void step2() {
    if (len_ < 2) return;
    switch (at(len_ - 2)) {
      case 'a':
        if (ends("ational")) { replace_if_m("ate"); break; }
        if (ends("tional")) { replace_if_m("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { replace_if_m("ence"); break; }
        if (ends("anci")) { replace_if_m("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { replace_if_m("ize"); break; }
        break;
      case 'l':
        if (ends("bli")) { replace_if_m("ble"); break; }
        if (ends("alli")) { replace_if_m("al"); break; }
        if (ends("entli")) { replace_if_m("ent"); break; }
        if (ends("eli")) { replace_if_m("e"); break; }
        if (ends("ousli")) { replace_if_m("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { replace_if_m("ize"); break; }
        if (ends("ation")) { replace_if_m("ate"); break; }
        if (ends("ator")) { replace_if_m("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { replace_if_m("al"); break; }
        if (ends("iveness")) { replace_if_m("ive"); break; }
        if (ends("fulness")) { replace_if_m("ful"); break; }
        if (ends("ousness")) { replace_if_m("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { replace_if_m("al"); break; }
        if (ends("iviti")) { replace_if_m("ive"); break; }
        if (ends("biliti")) { replace_if_m("ble"); break; }
        break;
      case 'g':
        if (ends("logi")) { replace_if_m("log"); break; }
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (at(len_ - 1)) {
      case 'e':
        if (ends("icate")) { replace_if_m("ic"); break; }
        if (ends("ative")) { replace_if_m(""); break; }
        if (ends("alize")) { replace_if_m("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { replace_if_m("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { replace_if_m("ic"); break; }
        if (ends("ful")) { replace_if_m(""); break; }
        break;
      case 's':
        if (ends("ness")) { replace_if_m(""); break; }
        break;
      default:
        break;
    }
  }

  void step4() {
    if (len_ < 2) return;
    switch (at(len_ - 2)) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j_ >= 1 && (at(j_ - 1) == 's' || at(j_ - 1) == 't')) break;
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (measure() > 1) len_ = j_;
  }

  void step5() {
    j_ = len_;
    if (at(len_ - 1) == 'e') {
      int a = measure();
      if (a > 1 || (a == 1 && !cvc(len_ - 2))) chop(1);
    }
    if (at(len_ - 1) == 'l' && double_cons(len_ - 1) && measure() > 1) chop(1);
  }

  std::string w_;
  int len_;
  int j_ = 0;
};

bool all_lower_alpha(std::string_view s) {
  for (char c : s) {
    if (c < 'a' || c > 'z') return false;
  }
  return !s.empty();
}

}  // namespace

std::string porter_stem(std::string_view word) {
  if (!all_lower_alpha(word)) return std::string(word);
  return Porter(word).run();
}

}  // namespace lra
