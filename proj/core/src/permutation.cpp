#include "grothlab/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>

#include "grothlab/errors.hpp"

namespace grothlab {

namespace {

std::vector<int> validated(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n == 0) throw parse_error("malformed permutation: empty one-line notation");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : images) {
        if (v < 1 || v > n)
            throw parse_error("malformed permutation: value " + std::to_string(v) +
                              " out of range [1," + std::to_string(n) + "]");
        if (seen[static_cast<size_t>(v - 1)])
            throw parse_error("malformed permutation: value " + std::to_string(v) +
                              " repeats");
        seen[static_cast<size_t>(v - 1)] = true;
    }
    return images;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(validated(std::move(images))) {
    inverse_.resize(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        inverse_[static_cast<size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest_element(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t\r\n");
    size_t end = text.find_last_not_of(" \t\r\n");
    if (begin == std::string_view::npos)
        throw parse_error("malformed permutation: empty input");
    text = text.substr(begin, end - begin + 1);

    std::vector<int> images;
    if (text.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
            size_t b = tok.find_first_not_of(" \t");
            size_t e = tok.find_last_not_of(" \t");
            if (b == std::string_view::npos)
                throw parse_error("malformed permutation: empty entry in '" +
                                  std::string(text) + "'");
            tok = tok.substr(b, e - b + 1);
            int value = 0;
            auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
                throw parse_error("malformed permutation: bad entry '" + std::string(tok) + "'");
            images.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    } else {
        // Digit-string form is unambiguous only for n <= 9.
        for (char c : text) {
            if (c < '1' || c > '9')
                throw parse_error(std::string("malformed permutation: bad character '") +
                                  c + "'");
            images.push_back(c - '0');
        }
        if (images.size() > 9)
            throw parse_error("malformed permutation: digit form limited to n <= 9, "
                              "use comma-separated values");
    }
    return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
    std::string out;
    const bool digits = size() <= 9;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(images_[i]);
    }
    return out;
}

int coxeter_length(const Permutation& w) {
    const int n = w.size();
    int inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

namespace {

bool fireworks_by_pattern(const Permutation& w) {
    // 3-12 pattern: i < j with w(j) < w(j+1) < w(i).
    const int n = w.size();
    int prefix_max = 0;
    for (int j = 1; j + 1 <= n; ++j) {
        if (j >= 2 && w(j) < w(j + 1) && prefix_max > w(j + 1)) return false;
        prefix_max = std::max(prefix_max, w(j));
    }
    return true;
}

[[maybe_unused]] bool fireworks_by_run_initials(const Permutation& w) {
    int last_initial = 0;
    for (const Run& r : descending_runs(w)) {
        if (w(r.first) < last_initial) return false;
        last_initial = w(r.first);
    }
    return true;
}

bool layered_by_patterns(const Permutation& w) {
    // 231 and 312, classical (positions need not be adjacent).
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const int a = w(i), b = w(j), c = w(k);
                if (c < a && a < b) return false;  // 231
                if (b < c && c < a) return false;  // 312
            }
    return true;
}

[[maybe_unused]] bool layered_by_blocks(const Permutation& w) {
    const int n = w.size();
    int pos = 1;
    int low = 0;
    while (pos <= n) {
        const int top = w(pos);
        if (top <= low) return false;
        for (int v = top; v > low; --v) {
            if (w(pos) != v) return false;
            ++pos;
        }
        low = top;
    }
    return true;
}

}  // namespace

bool is_fireworks(const Permutation& w) {
    const bool by_pattern = fireworks_by_pattern(w);
    assert(by_pattern == fireworks_by_run_initials(w));
    return by_pattern;
}

bool is_layered(const Permutation& w) {
    const bool by_pattern = layered_by_patterns(w);
    assert(by_pattern == layered_by_blocks(w));
    return by_pattern;
}

std::vector<Run> descending_runs(const Permutation& w) {
    const int n = w.size();
    std::vector<Run> runs;
    int start = 1;
    for (int i = 1; i <= n; ++i) {
        if (i == n || w(i) < w(i + 1)) {
            runs.push_back(Run{start, i});
            start = i + 1;
        }
    }
    return runs;
}

Permutation layered_from_blocks(const std::vector<int>& blocks) {
    if (blocks.empty())
        throw precondition_error("layered_from_blocks: block list is empty");
    std::vector<int> images;
    int base = 0;
    for (int b : blocks) {
        if (b < 1)
            throw precondition_error("layered_from_blocks: block size " +
                                     std::to_string(b) + " is not positive");
        for (int v = base + b; v > base; --v) images.push_back(v);
        base += b;
    }
    return Permutation(std::move(images));
}

Permutation layered_from_runs(const Permutation& w) {
    if (!is_fireworks(w))
        throw precondition_error("layered_from_runs: " + w.to_string() +
                                 " is not fireworks");
    std::vector<int> blocks;
    for (const Run& r : descending_runs(w)) blocks.push_back(r.last - r.first + 1);
    return layered_from_blocks(blocks);
}

std::vector<bool> left_to_right_maxima(const Permutation& w) {
    const int n = w.size();
    std::vector<bool> flags(static_cast<size_t>(n), false);
    int best = 0;
    for (int p = 1; p <= n; ++p) {
        if (w(p) > best) {
            flags[static_cast<size_t>(p - 1)] = true;
            best = w(p);
        }
    }
    return flags;
}

bool is_left_to_right_maximum(const Permutation& w, int pos, int from) {
    for (int q = from; q < pos; ++q)
        if (w(q) > w(pos)) return false;
    return true;
}

std::vector<bool> run_initial_flags(const Permutation& w) {
    const int n = w.size();
    std::vector<bool> flags(static_cast<size_t>(n), false);
    for (const Run& r : descending_runs(w)) flags[static_cast<size_t>(r.first - 1)] = true;
    return flags;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}


}  // namespace grothlab
