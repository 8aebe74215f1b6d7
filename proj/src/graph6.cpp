#include "pisz/graph6.hpp"

#include <array>

namespace pisz {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
        throw Graph6Error("byte outside the printable range 63..126", pos);
    }
    return c - kBias;
}

}  // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6 offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.starts_with(kHeader)) pos = kHeader.size();
    if (pos >= text.size()) throw Graph6Error("missing order byte", pos);

    int n = sextet(text, pos);
    ++pos;
    if (n == 63) {
        // '~' introduces an 18-bit order.
        if (text.size() < pos + 3) throw Graph6Error("truncated long order", text.size());
        if (static_cast<unsigned char>(text[pos]) == 126) {
            throw Graph6Error("36-bit orders are not supported", pos);
        }
        n = 0;
        for (int i = 0; i < 3; ++i, ++pos) n = (n << 6) | sextet(text, pos);
        if (n > kMaxOrder) throw Graph6Error("order " + std::to_string(n) + " exceeds 64", pos - 3);
    }

    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (pairs + 5) / 6;
    if (text.size() != pos + body) {
        throw Graph6Error("expected " + std::to_string(body) + " data bytes, found " +
                              std::to_string(text.size() - std::min(text.size(), pos)),
                          std::min(text.size(), pos + body));
    }

    std::array<VertexSet, kMaxOrder> rows{};
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int bits = sextet(text, pos + k / 6);
            if ((bits >> (5 - k % 6)) & 1) {
                rows[u] |= bit(v);
                rows[v] |= bit(u);
            }
        }
    }
    if (k % 6 != 0) {
        const std::size_t last = pos + k / 6;
        const int pad = sextet(text, last) & ((1 << (6 - k % 6)) - 1);
        if (pad != 0) throw Graph6Error("nonzero padding bits", last);
    }
    // Validate bytes that carried no pair bits (possible only when pairs == 0).
    for (std::size_t i = pos; i < text.size(); ++i) sextet(text, i);
    return Graph::from_rows(n, {rows.data(), static_cast<std::size_t>(n)});
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw GraphError("write_graph6 supports orders up to 62");
    std::string out(1, static_cast<char>(n + kBias));
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

std::optional<std::string> Graph6LineReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        if (line.starts_with(kHeader)) line.erase(0, kHeader.size());
        if (line.empty()) continue;
        return line;
    }
    return std::nullopt;
}

}  // namespace pisz
