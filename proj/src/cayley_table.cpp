#include "magma/cayley_table.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace magma {

parse_error::parse_error(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

CayleyTable::CayleyTable(int order, std::vector<Elem> entries,
                         std::vector<std::string> names)
    : order_(order), entries_(std::move(entries)), names_(std::move(names)) {
    if (order_ < 1)
        throw std::invalid_argument("table order must be at least 1");
    if (entries_.size() != static_cast<std::size_t>(order_) * order_)
        throw std::invalid_argument("table entry count does not match order");
    for (Elem e : entries_)
        if (e < 0 || e >= order_)
            throw std::invalid_argument("table entry out of range");
    if (!names_.empty() && names_.size() != static_cast<std::size_t>(order_))
        throw std::invalid_argument("name count does not match order");
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Elem>>& rows,
                                   std::vector<std::string> names) {
    std::vector<Elem> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size())
            throw std::invalid_argument("table rows must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return CayleyTable(static_cast<int>(rows.size()), std::move(flat),
                       std::move(names));
}

std::string CayleyTable::display(Elem x) const {
    if (has_names())
        return names_[static_cast<std::size_t>(x)];
    return std::to_string(x);
}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back({line.substr(start, i - start),
                       static_cast<int>(start) + 1});
    }
    return out;
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        return c == '#';
    }
    return true;
}

int parse_int(const Token& tok, int line_no) {
    const std::string& s = tok.text;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size())
        throw parse_error(line_no, tok.column, "expected an integer, got '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error(line_no, tok.column,
                              "expected an integer, got '" + s + "'");
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw parse_error(line_no, tok.column, "integer out of range: '" + s + "'");
    }
}

}  // namespace

CayleyTable parse_table(std::istream& in, int order_cap) {
    std::string line;
    int line_no = 0;
    int order = -1;
    std::vector<Elem> entries;
    int rows_read = 0;
    std::vector<std::string> names;
    bool names_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line))
            continue;
        std::vector<Token> toks = tokenize(line);

        if (order < 0) {
            if (toks.size() != 1)
                throw parse_error(line_no, toks.size() > 1 ? toks[1].column : 1,
                                  "header must be a single integer order");
            order = parse_int(toks[0], line_no);
            if (order < 1)
                throw parse_error(line_no, toks[0].column,
                                  "order must be at least 1");
            if (order > order_cap)
                throw parse_error(line_no, toks[0].column,
                                  "order " + std::to_string(order) +
                                      " exceeds cap " + std::to_string(order_cap));
            entries.reserve(static_cast<std::size_t>(order) * order);
            continue;
        }

        if (toks[0].text == "@names") {
            if (rows_read < order)
                throw parse_error(line_no, toks[0].column,
                                  "names line before all rows were read");
            if (names_seen)
                throw parse_error(line_no, toks[0].column, "duplicate names line");
            if (static_cast<int>(toks.size()) - 1 != order)
                throw parse_error(line_no, toks[0].column,
                                  "expected " + std::to_string(order) +
                                      " names, got " +
                                      std::to_string(toks.size() - 1));
            for (std::size_t i = 1; i < toks.size(); ++i)
                names.push_back(toks[i].text);
            names_seen = true;
            continue;
        }

        if (rows_read >= order)
            throw parse_error(line_no, toks[0].column,
                              "unexpected content after the table");

        if (static_cast<int>(toks.size()) != order)
            throw parse_error(line_no,
                              toks.size() > static_cast<std::size_t>(order)
                                  ? toks[order].column
                                  : toks.back().column,
                              "row " + std::to_string(rows_read + 1) + " has " +
                                  std::to_string(toks.size()) +
                                  " entries, expected " + std::to_string(order));
        for (const Token& tok : toks) {
            int v = parse_int(tok, line_no);
            if (v < 0 || v >= order)
                throw parse_error(line_no, tok.column,
                                  "entry " + std::to_string(v) +
                                      " out of range [0, " +
                                      std::to_string(order) + ")");
            entries.push_back(v);
        }
        ++rows_read;
    }

    if (order < 0)
        throw parse_error(line_no + 1, 1, "missing table header");
    if (rows_read < order)
        throw parse_error(line_no + 1, 1,
                          "expected " + std::to_string(order) + " rows, found " +
                              std::to_string(rows_read));
    return CayleyTable(order, std::move(entries), std::move(names));
}

CayleyTable parse_table(std::string_view text, int order_cap) {
    std::istringstream in{std::string(text)};
    return parse_table(in, order_cap);
}

std::string serialize_table(const CayleyTable& t) {
    std::string out = std::to_string(t.order());
    out.push_back('\n');
    for (Elem x = 0; x < t.order(); ++x) {
        for (Elem y = 0; y < t.order(); ++y) {
            if (y)
                out.push_back(' ');
            out += std::to_string(t.at(x, y));
        }
        out.push_back('\n');
    }
    if (t.has_names()) {
        out += "@names";
        for (const std::string& name : t.names()) {
            out.push_back(' ');
            out += name;
        }
        out.push_back('\n');
    }
    return out;
}

std::optional<TripleWitness> associativity_witness(const CayleyTable& t) {
    const int n = t.order();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem xy = t.at(x, y);
            for (Elem z = 0; z < n; ++z)
                if (t.at(xy, z) != t.at(x, t.at(y, z)))
                    return TripleWitness{x, y, z};
        }
    return std::nullopt;
}

bool is_associative(const CayleyTable& t) {
    return !associativity_witness(t).has_value();
}

std::optional<PairWitness> commutativity_witness(const CayleyTable& t) {
    const int n = t.order();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y)
            if (t.at(x, y) != t.at(y, x))
                return PairWitness{x, y};
    return std::nullopt;
}

bool is_commutative(const CayleyTable& t) {
    return !commutativity_witness(t).has_value();
}

std::optional<Elem> identity_of(const CayleyTable& t) {
    const int n = t.order();
    for (Elem e = 0; e < n; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x)
            ok = t.at(e, x) == x && t.at(x, e) == x;
        if (ok)
            return e;
    }
    return std::nullopt;
}

bool is_quasigroup(const CayleyTable& t) {
    const int n = t.order();
    std::vector<char> seen(n);
    for (Elem x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem y = 0; y < n; ++y) {
            Elem v = t.at(x, y);
            if (seen[v])
                return false;
            seen[v] = 1;
        }
    }
    for (Elem y = 0; y < n; ++y) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem x = 0; x < n; ++x) {
            Elem v = t.at(x, y);
            if (seen[v])
                return false;
            seen[v] = 1;
        }
    }
    return true;
}

std::vector<Elem> idempotents(const CayleyTable& t) {
    std::vector<Elem> out;
    for (Elem x = 0; x < t.order(); ++x)
        if (t.at(x, x) == x)
            out.push_back(x);
    return out;
}

bool has_unique_division(const CayleyTable& t) {
    const int n = t.order();
    std::vector<char> seen(n);
    for (Elem a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem c = 0; c < n; ++c) {
            Elem v = t.at(a, c);
            if (seen[v])
                return false;
            seen[v] = 1;
        }
    }
    return true;
}

ClassificationReport classify(const CayleyTable& t) {
    ClassificationReport r;
    r.associative = is_associative(t);
    r.commutative = is_commutative(t);
    r.identity = identity_of(t);
    r.quasigroup = is_quasigroup(t);
    r.loop = r.quasigroup && r.identity.has_value();
    r.group = r.loop && r.associative;
    r.idempotent_elements = idempotents(t);
    return r;
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b,
                           int order_cap) {
    const long long order = static_cast<long long>(a.order()) * b.order();
    if (order > order_cap)
        throw cap_exceeded("direct product order " + std::to_string(order) +
                           " exceeds cap " + std::to_string(order_cap));
    const int n = static_cast<int>(order), nb = b.order();
    std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            entries[static_cast<std::size_t>(x) * n + y] =
                a.at(x / nb, y / nb) * nb + b.at(x % nb, y % nb);
    return CayleyTable(n, std::move(entries));
}

}  // namespace magma
