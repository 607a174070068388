#include "cayley/continuant.hpp"

#include <string>

#include "cayley/error.hpp"
#include "cayley/json_writer.hpp"

namespace cayley {
namespace {

// K of entries[front, size - back). A range of length -1 has K = 0, which
// extends the recursion one step below K() = 1.
Integer sub_continuant(std::span<const std::uint64_t> entries,
                       std::size_t front, std::size_t back) {
  if (front + back == entries.size() + 1) return 0;
  if (front + back > entries.size()) {
    throw Error(ErrorCode::kTooShort, "subword shorter than -1 entries");
  }
  Integer next = 1;  // K of the empty suffix
  Integer after = 0;
  for (std::size_t i = entries.size() - back; i-- > front;) {
    Integer cur = static_cast<unsigned long>(entries[i]) * next + after;
    after = std::move(next);
    next = std::move(cur);
  }
  return next;
}

Integer breve(const Word& w) { return sub_continuant(w.entries(), 0, 1); }
Integer breve2(const Word& w) { return sub_continuant(w.entries(), 1, 1); }

void require_even_alpha(const Word& alpha) {
  if (alpha.empty()) throw Error(ErrorCode::kTooShort, "alpha is empty");
  if (alpha.size() % 2 != 0) {
    throw Error(ErrorCode::kOddAlpha,
                "alpha " + alpha.to_string() + " has odd length");
  }
}

std::vector<Word> words_of_length(std::uint64_t max_entry, std::size_t len) {
  std::vector<Word> out;
  std::vector<std::uint64_t> cur(len, 1);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = len;
    while (i > 0 && cur[i - 1] == max_entry) {
      cur[i - 1] = 1;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

void write_word(JsonWriter& w, const Word& word) {
  w.begin_array();
  for (std::uint64_t x : word.entries()) w.value(x);
  w.end_array();
}

void write_findings(JsonWriter& w, const std::vector<RMatchFinding>& list) {
  w.begin_array();
  for (const RMatchFinding& f : list) {
    w.begin_object();
    w.key("alpha");
    write_word(w, f.alpha);
    w.key("beta");
    write_word(w, f.beta);
    w.key("s").value(f.s);
    w.key("b").value(f.b);
    w.key("terms").begin_array();
    for (const Integer& t : f.terms) w.value(t);
    w.end_array();
    w.end_object();
  }
  w.end_array();
}

}  // namespace

Word::Word(std::initializer_list<std::uint64_t> entries)
    : Word(std::vector<std::uint64_t>(entries)) {}

Word::Word(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {
  for (std::uint64_t x : entries_) {
    if (x == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "word entries must be positive integers");
    }
  }
}

Word Word::operator+(const Word& other) const {
  std::vector<std::uint64_t> out = entries_;
  out.insert(out.end(), other.entries_.begin(), other.entries_.end());
  return Word(std::move(out));
}

Word Word::power(std::size_t k) const {
  std::vector<std::uint64_t> out;
  out.reserve(entries_.size() * k);
  for (std::size_t i = 0; i < k; ++i) {
    out.insert(out.end(), entries_.begin(), entries_.end());
  }
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

Word parse_word(std::string_view text) {
  std::vector<std::uint64_t> entries;
  if (text.empty()) return Word();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(
        start, comma == std::string_view::npos ? text.npos : comma - start);
    const Integer value = parse_integer(piece);
    if (sgn(value) <= 0 || !value.fits_ulong_p()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "word entry '" + std::string(piece) +
                      "' is not a positive 64-bit integer");
    }
    entries.push_back(value.get_ui());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Word(std::move(entries));
}

Integer continuant(const Word& w) { return sub_continuant(w.entries(), 0, 0); }

Integer breve_continuant(const Word& w, int level) {
  if (level == 1) {
    if (w.empty()) throw Error(ErrorCode::kTooShort, "K̆ of the empty word");
    return breve(w);
  }
  if (level == 2) {
    if (w.size() < 2) {
      throw Error(ErrorCode::kTooShort,
                  "K̆2 needs at least two entries, got " + w.to_string());
    }
    return breve2(w);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "abbreviation level must be 1 or 2, got " + std::to_string(level));
}

ExactRatio geodesic_multiplier(const Word& alpha) {
  if (alpha.empty()) throw Error(ErrorCode::kTooShort, "alpha is empty");
  return ExactRatio(breve(alpha.power(2)), breve(alpha));
}

std::vector<Integer> geodesic_sequence(const Word& alpha, const Word& beta,
                                       std::size_t count) {
  require_even_alpha(alpha);
  const ExactRatio multiplier = geodesic_multiplier(alpha);
  std::vector<Integer> terms;
  terms.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Integer direct = breve(alpha.power(k) + beta);
    if (k < 2) {
      terms.push_back(direct);
      continue;
    }
    const ExactRatio next =
        multiplier * ExactRatio(terms[k - 1]) - ExactRatio(terms[k - 2]);
    if (!next.is_integral() || next.to_integer() != direct) {
      throw Error(ErrorCode::kInvariantViolation,
                  "geodesic recurrence gives " + next.to_string() +
                      " but direct evaluation gives " + to_string(direct));
    }
    terms.push_back(direct);
  }
  return terms;
}

bool split_identity_check(const Word& alpha, const Word& beta) {
  if (alpha.empty()) throw Error(ErrorCode::kTooShort, "alpha is empty");
  const Word alpha_beta = alpha + beta;
  const Integer lhs = breve(alpha.power(2) + beta);
  const Integer rhs =
      continuant(alpha) * breve(alpha_beta) + breve(alpha) * breve2(alpha_beta);
  return lhs == rhs;
}

bool geodesic_ratio_check(const Word& alpha, const Word& lambda,
                          const Word& rho) {
  require_even_alpha(alpha);
  const Integer lhs = breve(alpha.power(2)) * breve(lambda + alpha + rho);
  const Integer rhs = breve(alpha) * (breve(lambda + alpha.power(2) + rho) +
                                      breve(lambda + rho));
  return lhs == rhs;
}

RMatchReport r_match_search(const RMatchBounds& bounds) {
  if (bounds.max_entry == 0 || bounds.max_len == 0 || bounds.max_terms == 0) {
    throw Error(ErrorCode::kInvalidArgument, "r-match bounds must be positive");
  }
  RMatchReport report;
  report.bounds = bounds;

  std::vector<Word> betas;
  for (std::size_t len = 1; len <= bounds.max_len; ++len) {
    for (Word& w : words_of_length(bounds.max_entry, len)) {
      betas.push_back(std::move(w));
    }
  }

  for (std::size_t alpha_len = 2; alpha_len <= bounds.max_len; alpha_len += 2) {
    for (const Word& alpha : words_of_length(bounds.max_entry, alpha_len)) {
      for (const Word& beta : betas) {
        ++report.pairs_examined;
        std::vector<Integer> terms =
            geodesic_sequence(alpha, beta, bounds.max_terms);
        const Integer s = terms[0];
        const Integer b = terms.size() > 1 ? terms[1] : breve(alpha + beta);

        // R_0 = s, R_1 = b, R_{k+1} = (2b/s) R_k - R_{k-1}, exactly.
        const ExactRatio mult(Integer(2 * b), s);
        std::vector<ExactRatio> r{ExactRatio(s), ExactRatio(b)};
        while (r.size() < terms.size()) {
          r.push_back(mult * r[r.size() - 1] - r[r.size() - 2]);
        }
        bool match = true;
        for (std::size_t k = 0; k < terms.size(); ++k) {
          if (r[k] != ExactRatio(terms[k])) {
            match = false;
            break;
          }
        }
        if (!match) continue;
        RMatchFinding finding{alpha, beta, s, b, std::move(terms)};
        if (s >= 2) {
          report.matches_s_ge_2.push_back(std::move(finding));
        } else {
          report.s1_coincidences.push_back(std::move(finding));
        }
      }
    }
  }
  return report;
}

void write_json(std::ostream& out, const RMatchReport& report) {
  JsonWriter w(out);
  w.begin_object();
  w.key("bounds").begin_object();
  w.key("max_entry").value(report.bounds.max_entry);
  w.key("max_len").value(static_cast<std::uint64_t>(report.bounds.max_len));
  w.key("max_terms").value(static_cast<std::uint64_t>(report.bounds.max_terms));
  w.end_object();
  w.key("pairs_examined").value(static_cast<std::uint64_t>(report.pairs_examined));
  w.key("matches_s_ge_2");
  write_findings(w, report.matches_s_ge_2);
  w.key("s1_coincidences");
  write_findings(w, report.s1_coincidences);
  w.end_object();
}

}  // namespace cayley
