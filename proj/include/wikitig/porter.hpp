// Copyright 2026 The WikiTIG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIKITIG_PORTER_HPP_
#define WIKITIG_PORTER_HPP_

// Porter (1980) suffix stripper, following the reference C implementation
// including its "bli" -> "ble" and "logi" -> "log" departures. Expects a
// lowercase ASCII word.

#include <string>
#include <string_view>

namespace wikitig {

class PorterStemmer {
 public:
  std::string Stem(std::string_view word) {
    b_.assign(word);
    if (b_.size() <= 2) return b_;
    k_ = static_cast<int>(b_.size()) - 1;
    Step1ab();
    if (k_ > 0) {
      Step1c();
      Step2();
      Step3();
      Step4();
      Step5();
    }
    return b_.substr(0, static_cast<std::size_t>(k_) + 1);
  }

 private:
  bool Cons(int i) const {
    switch (b_[static_cast<std::size_t>(i)]) {
      case 'a': case 'e': case 'i': case 'o': case 'u': return false;
      case 'y': return i == 0 ? true : !Cons(i - 1);
      default: return true;
    }
  }

  // Number of VC sequences in b[0..j].
  int M() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!Cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (Cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!Cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool VowelInStem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!Cons(i)) return true;
    }
    return false;
  }

  bool DoubleC(int j) const {
    if (j < 1) return false;
    if (b_[static_cast<std::size_t>(j)] != b_[static_cast<std::size_t>(j - 1)]) return false;
    return Cons(j);
  }

  bool Cvc(int i) const {
    if (i < 2 || !Cons(i) || Cons(i - 1) || !Cons(i - 2)) return false;
    const char ch = b_[static_cast<std::size_t>(i)];
    return !(ch == 'w' || ch == 'x' || ch == 'y');
  }

  bool Ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (b_[static_cast<std::size_t>(k_)] != s.back()) return false;
    if (std::string_view(b_).substr(static_cast<std::size_t>(k_ - len + 1),
                                    static_cast<std::size_t>(len)) != s)
      return false;
    j_ = k_ - len;
    return true;
  }

  void SetTo(std::string_view s) {
    b_.replace(static_cast<std::size_t>(j_ + 1), std::string::npos, s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void R(std::string_view s) {
    if (M() > 0) SetTo(s);
  }

  char At(int i) const { return b_[static_cast<std::size_t>(i)]; }

  void Step1ab() {
    if (At(k_) == 's') {
      if (Ends("sses")) {
        k_ -= 2;
      } else if (Ends("ies")) {
        SetTo("i");
      } else if (At(k_ - 1) != 's') {
        --k_;
      }
    }
    if (Ends("eed")) {
      if (M() > 0) --k_;
    } else if ((Ends("ed") || Ends("ing")) && VowelInStem()) {
      k_ = j_;
      if (Ends("at")) {
        SetTo("ate");
      } else if (Ends("bl")) {
        SetTo("ble");
      } else if (Ends("iz")) {
        SetTo("ize");
      } else if (DoubleC(k_)) {
        --k_;
        const char ch = At(k_);
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (M() == 1 && Cvc(k_)) {
        j_ = k_;
        SetTo("e");
      }
    }
    b_.resize(static_cast<std::size_t>(k_) + 1);
  }

  void Step1c() {
    if (Ends("y") && VowelInStem()) b_[static_cast<std::size_t>(k_)] = 'i';
  }

  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  template <std::size_t N>
  void ApplyFirst(const Rule (&rules)[N]) {
    for (const auto& rule : rules) {
      if (Ends(rule.suffix)) {
        R(rule.replacement);
        return;
      }
    }
  }

  void Step2() {
    if (k_ < 1) return;
    switch (At(k_ - 1)) {
      case 'a': {
        static constexpr Rule kRules[] = {{"ational", "ate"}, {"tional", "tion"}};
        ApplyFirst(kRules);
        break;
      }
      case 'c': {
        static constexpr Rule kRules[] = {{"enci", "ence"}, {"anci", "ance"}};
        ApplyFirst(kRules);
        break;
      }
      case 'e': {
        static constexpr Rule kRules[] = {{"izer", "ize"}};
        ApplyFirst(kRules);
        break;
      }
      case 'l': {
        static constexpr Rule kRules[] = {{"bli", "ble"}, {"alli", "al"},
                                          {"entli", "ent"}, {"eli", "e"},
                                          {"ousli", "ous"}};
        ApplyFirst(kRules);
        break;
      }
      case 'o': {
        static constexpr Rule kRules[] = {{"ization", "ize"}, {"ation", "ate"},
                                          {"ator", "ate"}};
        ApplyFirst(kRules);
        break;
      }
      case 's': {
        static constexpr Rule kRules[] = {{"alism", "al"}, {"iveness", "ive"},
                                          {"fulness", "ful"}, {"ousness", "ous"}};
        ApplyFirst(kRules);
        break;
      }
      case 't': {
        static constexpr Rule kRules[] = {{"aliti", "al"}, {"iviti", "ive"},
                                          {"biliti", "ble"}};
        ApplyFirst(kRules);
        break;
      }
      case 'g': {
        static constexpr Rule kRules[] = {{"logi", "log"}};
        ApplyFirst(kRules);
        break;
      }
      default:
        break;
    }
  }

  void Step3() {
    switch (At(k_)) {
      case 'e': {
        static constexpr Rule kRules[] = {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}};
        ApplyFirst(kRules);
        break;
      }
      case 'i': {
        static constexpr Rule kRules[] = {{"iciti", "ic"}};
        ApplyFirst(kRules);
        break;
      }
      case 'l': {
        static constexpr Rule kRules[] = {{"ical", "ic"}, {"ful", ""}};
        ApplyFirst(kRules);
        break;
      }
      case 's': {
        static constexpr Rule kRules[] = {{"ness", ""}};
        ApplyFirst(kRules);
        break;
      }
      default:
        break;
    }
  }

  void Step4() {
    if (k_ < 1) return;
    bool matched = false;
    switch (At(k_ - 1)) {
      case 'a': matched = Ends("al"); break;
      case 'c': matched = Ends("ance") || Ends("ence"); break;
      case 'e': matched = Ends("er"); break;
      case 'i': matched = Ends("ic"); break;
      case 'l': matched = Ends("able") || Ends("ible"); break;
      case 'n': matched = Ends("ant") || Ends("ement") || Ends("ment") || Ends("ent"); break;
      case 'o':
        matched = (Ends("ion") && j_ >= 0 && (At(j_) == 's' || At(j_) == 't')) ||
                  Ends("ou");
        break;
      case 's': matched = Ends("ism"); break;
      case 't': matched = Ends("ate") || Ends("iti"); break;
      case 'u': matched = Ends("ous"); break;
      case 'v': matched = Ends("ive"); break;
      case 'z': matched = Ends("ize"); break;
      default: break;
    }
    if (matched && M() > 1) k_ = j_;
  }

  void Step5() {
    j_ = k_;
    if (At(k_) == 'e') {
      const int a = M();
      if (a > 1 || (a == 1 && !Cvc(k_ - 1))) --k_;
    }
    if (At(k_) == 'l' && DoubleC(k_) && M() > 1) --k_;
  }

  std::string b_;
  int k_ = 0;
  int j_ = 0;
};

}  // namespace wikitig

#endif  // WIKITIG_PORTER_HPP_
