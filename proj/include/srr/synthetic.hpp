#ifndef SRR_SYNTHETIC_HPP
#define SRR_SYNTHETIC_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace srr {

/// Deterministic English-like text: Zipf-distributed words from a fixed
/// vocabulary of pseudo-words, spaces, occasional punctuation and newlines.
inline std::string english_like_text(std::size_t bytes, std::uint64_t seed)
{
    static const char* const common[] = {
        "the", "of", "and", "to", "a", "in", "is", "it", "you", "that", "he", "was", "for", "on", "are", "with",
        "as", "his", "they", "be", "at", "one", "have", "this", "from", "or", "had", "by", "not", "word", "but",
        "what", "some", "we", "can", "out", "other", "were", "all", "there", "when", "up", "use", "your", "how",
        "said", "an", "each", "she", "which", "do", "their", "time", "if", "will", "way", "about", "many", "then",
        "them", "would", "write", "like", "so", "these", "her", "long", "make", "thing", "see", "him", "two",
        "has", "look", "more", "day", "could", "go", "come", "did", "number", "sound", "no", "most", "people",
        "my", "over", "know", "water", "than", "call", "first", "who", "may", "down", "side", "been", "now", "find"};
    constexpr std::size_t common_count = sizeof(common) / sizeof(common[0]);

    std::mt19937_64 gen(seed);
    const char* consonants = "bcdfghjklmnprstvwy";
    const char* vowels = "aeiou";
    std::vector<std::string> vocab(common, common + common_count);
    while (vocab.size() < 5000) {
        std::string w;
        const std::size_t syl = 1 + gen() % 4;
        for (std::size_t s = 0; s < syl; ++s) {
            w += consonants[gen() % 18];
            w += vowels[gen() % 5];
            if (gen() % 3 == 0)
                w += consonants[gen() % 18];
        }
        vocab.push_back(std::move(w));
    }

    // Zipf(1) by inverting the harmonic CDF
    std::vector<double> cdf(vocab.size());
    double acc = 0;
    for (std::size_t r = 0; r < vocab.size(); ++r) {
        acc += 1.0 / static_cast<double>(r + 1);
        cdf[r] = acc;
    }

    std::string out;
    out.reserve(bytes + 16);
    bool sentence_start = true;
    while (out.size() < bytes) {
        const double x = static_cast<double>(gen() >> 11) * 0x1.0p-53 * acc;
        const std::size_t r = static_cast<std::size_t>(std::lower_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
        std::string w = vocab[std::min(r, vocab.size() - 1)];
        if (sentence_start && !w.empty())
            w[0] = static_cast<char>(w[0] - 'a' + 'A');
        out += w;
        sentence_start = false;
        const auto punct = gen() % 100;
        if (punct < 6) {
            out += ". ";
            sentence_start = true;
        } else if (punct < 10) {
            out += ", ";
        } else if (punct < 11) {
            out += ".\n";
            sentence_start = true;
        } else {
            out += ' ';
        }
    }
    out.resize(bytes);
    return out;
}

} // namespace srr

#endif // SRR_SYNTHETIC_HPP
