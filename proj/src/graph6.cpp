#include "speclab/graph6.hpp"

#include "speclab/error.hpp"

#include <string>

namespace speclab {

namespace {

constexpr std::size_t kShortMax = 62;
constexpr std::size_t kLongMax = 258047;

}  // namespace

std::string g6_encode(const Graph& g)
{
    const std::size_t n = g.order();
    std::string out;
    if (n <= kShortMax) {
        out.push_back(static_cast<char>(n + 63));
    }
    else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }

    int group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph g6_decode(std::string_view text)
{
    auto value = [&](std::size_t pos) -> int {
        int c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw Error(ErrorCode::MalformedGraph6, "byte " + std::to_string(pos) + " outside printable range");
        return c - 63;
    };

    if (text.empty())
        throw Error(ErrorCode::MalformedGraph6, "empty input");
    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = static_cast<std::size_t>(value(0));
        pos = 1;
    }
    else {
        if (text.size() >= 2 && text[1] == '~')
            throw Error(ErrorCode::SizeLimitExceeded, "eight-byte graph6 header exceeds the supported order");
        if (text.size() < 4)
            throw Error(ErrorCode::MalformedGraph6, "truncated size header");
        n = (static_cast<std::size_t>(value(1)) << 12) | (static_cast<std::size_t>(value(2)) << 6)
            | static_cast<std::size_t>(value(3));
        if (n <= kShortMax)
            throw Error(ErrorCode::MalformedGraph6, "long size header used for n <= 62");
        pos = 4;
    }
    if (n > kLongMax)
        throw Error(ErrorCode::MalformedGraph6, "order exceeds graph6 limit");
    if (n > kMaxOrder)
        throw Error(ErrorCode::SizeLimitExceeded, "graph order " + std::to_string(n) + " exceeds limit");

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Error(ErrorCode::MalformedGraph6,
                    "expected " + std::to_string(bytes) + " payload bytes, got " + std::to_string(text.size() - pos));

    GraphBuilder b(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = value(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        int last = value(text.size() - 1);
        int pad = static_cast<int>(6 - bits % 6);
        if ((last & ((1 << pad) - 1)) != 0)
            throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
    }
    return std::move(b).build();
}

}  // namespace speclab
