#include "tdc/graph6.hpp"

#include <cstdint>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_bits(std::string& out, std::uint64_t value, int bits) {
    for (int shift = bits - 6; shift >= 0; shift -= 6)
        out.push_back(static_cast<char>(((value >> shift) & 0x3f) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        append_bits(out, static_cast<std::uint64_t>(n), 18);
    } else {
        out.push_back('~');
        out.push_back('~');
        append_bits(out, static_cast<std::uint64_t>(n), 36);
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    std::size_t pos = 0;
    auto need = [&](std::size_t count) {
        if (pos + count > text.size())
            throw ParseError("graph6 input truncated", text.size());
    };
    auto sextet = [&](std::size_t at) -> int {
        int c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range 63..126", at);
        return c - 63;
    };

    need(1);
    long long n;
    if (text[pos] != '~') {
        n = sextet(pos);
        pos += 1;
    } else if (pos + 1 < text.size() && text[pos + 1] != '~') {
        need(4);
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(pos + i);
        pos += 4;
    } else {
        need(8);
        n = 0;
        for (int i = 2; i <= 7; ++i) n = (n << 6) | sextet(pos + i);
        pos += 8;
    }
    if (n < 1) throw ParseError("graph6 order must be >= 1", 0);

    const long long pairs = n * (n - 1) / 2;
    const std::size_t groups = static_cast<std::size_t>((pairs + 5) / 6);
    need(groups);
    if (pos + groups != text.size())
        throw ParseError("trailing bytes after graph6 payload", pos + groups);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int value = sextet(pos + static_cast<std::size_t>(bit / 6));
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (long long b = pairs; b < static_cast<long long>(groups) * 6; ++b) {
        int value = sextet(pos + static_cast<std::size_t>(b / 6));
        if ((value >> (5 - b % 6)) & 1)
            throw ParseError("nonzero padding bits", pos + static_cast<std::size_t>(b / 6));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace tdc
