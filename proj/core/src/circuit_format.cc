// Copyright 2026 The qindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qindep/circuit_format.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "qindep/errors.h"

namespace qindep {

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n";
    std::size_t b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    std::size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return value;
}

class LineParser {
   public:
    explicit LineParser(std::size_t max_qubits) : max_qubits_(max_qubits) {
    }

    void feed(std::size_t line_no, std::string_view raw) {
        line_ = line_no;
        std::string_view text = raw;
        if (std::size_t hash = text.find('#'); hash != std::string_view::npos) {
            text = text.substr(0, hash);
        }
        text = trim(text);
        if (text.empty()) {
            return;
        }
        std::size_t cut = text.find_first_of(" \t");
        std::string_view head = text.substr(0, cut);
        std::string_view rest = cut == std::string_view::npos ? std::string_view{} : trim(text.substr(cut));

        if (head == "layout") {
            parse_layout(rest);
            return;
        }
        if (!layout_) {
            fail("layout must be declared first");
        }
        if (head == "success") {
            parse_success(rest);
        } else if (head == "output") {
            parse_output(rest);
        } else if (head == "map") {
            parse_map(rest);
        } else if (auto kind = gate_kind_from_name(head)) {
            parse_gate(*kind, rest);
        } else {
            fail("unknown gate '" + std::string(head) + "'");
        }
    }

    Circuit finish(std::size_t last_line) {
        line_ = std::max<std::size_t>(last_line, 1);
        if (!layout_) {
            fail("missing layout line");
        }
        if (!success_) {
            fail("missing success set");
        }
        if (!measured_value_ && table_.empty()) {
            fail("missing output map");
        }
        OutputMap map = measured_value_ ? OutputMap::measured_value() : OutputMap::table(table_);
        try {
            return Circuit(*layout_, std::move(gates_), *success_, std::move(map), max_qubits_);
        } catch (const ParseError &) {
            throw;
        } catch (const InputError &e) {
            throw ParseError(output_line_, e.what());
        }
    }

   private:
    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(line_, message);
    }

    void parse_layout(std::string_view rest) {
        if (layout_) {
            fail("duplicate layout line");
        }
        auto tokens = split_ws(rest);
        const char *keys[] = {"M=", "P=", "E="};
        if (tokens.size() != 3) {
            fail("layout expects M=<int> P=<int> E=<int>");
        }
        std::size_t counts[3];
        for (int i = 0; i < 3; ++i) {
            if (!tokens[i].starts_with(keys[i])) {
                fail("layout expects M=<int> P=<int> E=<int>");
            }
            auto n = parse_number<std::size_t>(tokens[i].substr(2));
            if (!n) {
                fail("bad qubit count '" + std::string(tokens[i]) + "'");
            }
            counts[i] = *n;
        }
        SubsystemLayout layout{counts[0], counts[1], counts[2]};
        try {
            layout.validate(max_qubits_);
        } catch (const InputError &e) {
            fail(e.what());
        } catch (const ResourceError &e) {
            throw ResourceError("line " + std::to_string(line_) + ": " + e.what());
        }
        layout_ = layout;
    }

    void parse_success(std::string_view rest) {
        if (success_) {
            fail("duplicate success line");
        }
        if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}') {
            fail("success expects {<int>,...}");
        }
        std::string_view body = trim(rest.substr(1, rest.size() - 2));
        std::set<std::uint64_t> set;
        if (body.empty()) {
            fail("empty success set");
        }
        while (true) {
            std::size_t comma = body.find(',');
            std::string_view item = trim(body.substr(0, comma));
            auto p = parse_number<std::uint64_t>(item);
            if (!p) {
                fail("bad success outcome '" + std::string(item) + "'");
            }
            if (*p >= layout_->p_dim()) {
                fail("success outcome " + std::to_string(*p) + " out of range");
            }
            if (!set.insert(*p).second) {
                fail("duplicate success outcome " + std::to_string(*p));
            }
            if (comma == std::string_view::npos) {
                break;
            }
            body = body.substr(comma + 1);
        }
        success_ = std::move(set);
    }

    void parse_output(std::string_view rest) {
        if (rest != "m") {
            fail("output expects 'm' (use map lines for an explicit table)");
        }
        if (measured_value_ || !table_.empty()) {
            fail("output map declared twice");
        }
        measured_value_ = true;
        output_line_ = line_;
    }

    void parse_map(std::string_view rest) {
        if (measured_value_) {
            fail("map line after 'output m'");
        }
        auto tokens = split_ws(rest);
        if (tokens.size() != 4 || !tokens[0].starts_with("m=") || !tokens[1].starts_with("p=") || tokens[2] != "->") {
            fail("map expects m=<int> p=<int> -> <int>");
        }
        auto m = parse_number<std::uint64_t>(tokens[0].substr(2));
        auto p = parse_number<std::uint64_t>(tokens[1].substr(2));
        auto value = parse_number<std::int64_t>(tokens[3]);
        if (!m || !p || !value) {
            fail("map expects m=<int> p=<int> -> <int>");
        }
        if (*m >= layout_->m_dim()) {
            fail("map entry m=" + std::to_string(*m) + " out of range");
        }
        if (!table_.emplace(std::make_pair(*m, *p), *value).second) {
            fail("duplicate map entry m=" + std::to_string(*m) + " p=" + std::to_string(*p));
        }
        if (output_line_ == 0) {
            output_line_ = line_;
        }
    }

    Wire parse_wire(std::string_view token) const {
        if (token.size() < 2) {
            fail("bad wire '" + std::string(token) + "'");
        }
        Register reg;
        switch (token[0]) {
            case 'M':
                reg = Register::M;
                break;
            case 'P':
                reg = Register::P;
                break;
            case 'E':
                reg = Register::E;
                break;
            default:
                fail("bad wire '" + std::string(token) + "'");
        }
        auto index = parse_number<std::size_t>(token.substr(1));
        if (!index) {
            fail("bad wire '" + std::string(token) + "'");
        }
        return Wire{reg, *index};
    }

    DenseMatrix parse_matrix(std::string_view text) const {
        if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
            fail("explicit matrix must be written as [re,im ...; ...]");
        }
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<Complex> entries;
        std::size_t rows = 0;
        std::size_t cols = 0;
        while (true) {
            std::size_t semi = body.find(';');
            auto cells = split_ws(body.substr(0, semi));
            if (rows == 0) {
                cols = cells.size();
            } else if (cells.size() != cols) {
                fail("explicit matrix rows have different lengths");
            }
            for (std::string_view cell : cells) {
                std::size_t comma = cell.find(',');
                if (comma == std::string_view::npos) {
                    fail("matrix entry '" + std::string(cell) + "' must be re,im");
                }
                auto re = parse_number<double>(cell.substr(0, comma));
                auto im = parse_number<double>(cell.substr(comma + 1));
                if (!re || !im) {
                    fail("bad matrix entry '" + std::string(cell) + "'");
                }
                entries.emplace_back(*re, *im);
            }
            ++rows;
            if (semi == std::string_view::npos) {
                break;
            }
            body = body.substr(semi + 1);
        }
        try {
            return DenseMatrix(rows, cols, std::move(entries));
        } catch (const InputError &e) {
            fail(e.what());
        }
    }

    void parse_gate(GateKind kind, std::string_view rest) {
        Gate gate{kind, {}, std::nullopt};
        std::string_view wires_text = rest;
        if (std::size_t bracket = rest.find('['); bracket != std::string_view::npos) {
            wires_text = trim(rest.substr(0, bracket));
            gate.explicit_matrix = parse_matrix(trim(rest.substr(bracket)));
        }
        for (std::string_view token : split_ws(wires_text)) {
            gate.wires.push_back(parse_wire(token));
        }
        try {
            validate_gate(*layout_, gate);
        } catch (const InputError &e) {
            fail(e.what());
        }
        gates_.push_back(std::move(gate));
    }

    std::size_t max_qubits_;
    std::size_t line_ = 0;
    std::size_t output_line_ = 0;
    std::optional<SubsystemLayout> layout_;
    std::vector<Gate> gates_;
    std::optional<std::set<std::uint64_t>> success_;
    bool measured_value_ = false;
    OutputMap::Table table_;
};

}  // namespace

Circuit parse_circuit(std::string_view text, std::size_t max_qubits) {
    LineParser parser(max_qubits);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        parser.feed(++line_no, line);
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
    return parser.finish(line_no);
}

Circuit parse_circuit(std::istream &in, std::size_t max_qubits) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    return parse_circuit(text, max_qubits);
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string serialize(const Circuit &circuit) {
    const SubsystemLayout &layout = circuit.layout();
    std::ostringstream out;
    out << "layout M=" << layout.m_qubits << " P=" << layout.p_qubits << " E=" << layout.e_qubits << "\n";
    for (const Gate &gate : circuit.gates()) {
        out << gate_name(gate.kind);
        for (const Wire &w : gate.wires) {
            out << ' ' << register_name(w.reg) << w.index;
        }
        if (gate.explicit_matrix) {
            const DenseMatrix &m = *gate.explicit_matrix;
            out << " [";
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (r > 0) {
                    out << "; ";
                }
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    if (c > 0) {
                        out << ' ';
                    }
                    out << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
                }
            }
            out << ']';
        }
        out << "\n";
    }
    out << "success {";
    bool first = true;
    for (std::uint64_t p : circuit.success_set()) {
        out << (first ? "" : ",") << p;
        first = false;
    }
    out << "}\n";
    if (circuit.output_map().is_measured_value()) {
        out << "output m\n";
    } else {
        for (const auto &[key, value] : circuit.output_map().entries()) {
            out << "map m=" << key.first << " p=" << key.second << " -> " << value << "\n";
        }
    }
    return out.str();
}

}  // namespace qindep
