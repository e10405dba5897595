#include "lcgf2/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lcgf2/error.hpp"

namespace lcgf2::corpus {

namespace {

using Letters = std::vector<unsigned char>;

void extend(Letters& w, std::size_t n, unsigned char next, std::vector<int>& count,
            std::vector<Letters>& out) {
  if (w.size() == 2 * n) {
    out.push_back(w);
    return;
  }
  if (next < n) {
    w.push_back(next);
    ++count[next];
    extend(w, n, static_cast<unsigned char>(next + 1), count, out);
    --count[next];
    w.pop_back();
  }
  for (unsigned char a = 0; a < next; ++a) {
    if (count[a] != 1) continue;
    w.push_back(a);
    ++count[a];
    extend(w, n, next, count, out);
    --count[a];
    w.pop_back();
  }
}

std::vector<Letters> normalized_words(std::size_t n) {
  std::vector<Letters> out;
  Letters w;
  std::vector<int> count(n, 0);
  extend(w, n, 0, count, out);
  return out;
}

Letters renamed(const Letters& w) {
  Letters map(w.size(), 0xff), out(w.size());
  unsigned char next = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (map[w[k]] == 0xff) map[w[k]] = next++;
    out[k] = map[w[k]];
  }
  return out;
}

Letters class_minimum(const Letters& w) {
  const std::size_t len = w.size();
  Letters best = w, candidate(len);
  for (int reflect = 0; reflect < 2; ++reflect)
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t k = 0; k < len; ++k)
        candidate[k] = reflect ? w[(r + len - k) % len] : w[(r + k) % len];
      best = std::min(best, renamed(candidate));
    }
  return best;
}

}  // namespace

std::size_t normalized_word_count(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 1; k <= n; ++k) c *= 2 * k - 1;
  return c;
}

std::vector<CyclicWord> canonical_words(std::size_t n) {
  if (n == 0 || n > 26) throw Error(Errc::InvalidInput, "word corpus needs 1 <= n <= 26");
  std::vector<CyclicWord> out;
  for (const auto& w : normalized_words(n)) {
    if (class_minimum(w) != w) continue;
    CyclicWord word;
    for (unsigned char a : w) word.emplace_back(1, static_cast<char>('a' + a));
    out.push_back(std::move(word));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclicWord> words_up_to(std::size_t max_n) {
  std::vector<CyclicWord> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto words = canonical_words(n);
    out.insert(out.end(), words.begin(), words.end());
  }
  return out;
}

GraphPtr random_graph(std::size_t n, std::mt19937_64& rng) {
  std::vector<Slot> order(4 * n);
  std::iota(order.begin(), order.end(), Slot{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Slot> mate(4 * n);
  for (std::size_t k = 0; k < order.size(); k += 2) {
    mate[order[k]] = order[k + 1];
    mate[order[k + 1]] = order[k];
  }
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  return std::make_shared<const HalfEdgeGraph>(Labels(std::move(names)), std::move(mate));
}

}  // namespace lcgf2::corpus
