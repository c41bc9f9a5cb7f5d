#include <aspectra/graph6.hpp>

namespace aspectra {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr int kExtendedMarker = 126;
constexpr int kMaxOrder = 258047;  // 2^18 - 1, the 4-byte header limit

int payload_bytes(int n) {
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    return static_cast<int>((bits + 5) / 6);
}

int decode_byte(unsigned char b, std::size_t pos) {
    if (b < kBias || b > kMaxByte)
        throw Graph6Error("graph6: byte " + std::to_string(pos) + " outside printable range 63..126");
    return b - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
    if (record.empty()) throw Graph6Error("graph6: empty record");
    std::size_t pos = 0;
    long long n = 0;
    const int first = decode_byte(record[pos], pos);
    if (record[pos] == kExtendedMarker) {
        ++pos;
        if (pos < record.size() && record[pos] == kExtendedMarker)
            throw Graph6Error("graph6: 8-byte huge-order header is not supported");
        if (record.size() < 4) throw Graph6Error("graph6: truncated extended size header");
        for (int k = 0; k < 3; ++k, ++pos) n = n << 6 | decode_byte(record[pos], pos);
    } else {
        n = first;
        ++pos;
    }
    if (n < 1) throw Graph6Error("graph6: order must be at least 1");
    if (n > kMaxOrder) throw Graph6Error("graph6: order exceeds the 4-byte header limit");

    const int need = payload_bytes(static_cast<int>(n));
    if (static_cast<int>(record.size() - pos) < need)
        throw Graph6Error("graph6: truncated payload, expected " + std::to_string(need) + " bytes");
    if (static_cast<int>(record.size() - pos) > need)
        throw Graph6Error("graph6: trailing garbage after payload");

    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int group = decode_byte(record[pos + k / 6], pos + k / 6);
            if (group >> (5 - k % 6) & 1) edges.emplace_back(i, j);
        }
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxOrder)
        throw Graph6Error("graph6: order exceeds the 4-byte header limit");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(kExtendedMarker));
        out.push_back(static_cast<char>((n >> 12 & 0x3f) + kBias));
        out.push_back(static_cast<char>((n >> 6 & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int group = 0;
    int k = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            if (g.adjacent(i, j)) group |= 1 << (5 - k % 6);
            if (k % 6 == 5) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
            }
        }
    if (k % 6 != 0) out.push_back(static_cast<char>(group + kBias));
    return out;
}

}  // namespace aspectra
