// Copyright 2026 The qsym Authors
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

#include "qsym/instance_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

constexpr std::size_t kMaxQubits = 16;
constexpr std::size_t kMaxDim = 1u << kMaxQubits;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// [begin, end) of s with surrounding whitespace removed.
std::pair<std::size_t, std::size_t> trim(std::string_view s, std::size_t begin, std::size_t end) {
    while (begin < end && is_space(s[begin])) ++begin;
    while (end > begin && is_space(s[end - 1])) --end;
    return {begin, end};
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

class MatrixLiteralParser {
   public:
    MatrixLiteralParser(std::string_view line, std::size_t begin, std::size_t end, std::size_t line_no,
                        std::size_t dim)
        : s_(line), pos_(begin), end_(end), line_(line_no), dim_(dim) {}

    SparseMatrix parse() {
        std::vector<Triplet> t;
        expect('[');
        for (std::size_t r = 0;; ++r) {
            if (r == dim_) fail("expected " + std::to_string(dim_) + " rows");
            expect('[');
            for (std::size_t c = 0;; ++c) {
                if (c == dim_) fail("expected " + std::to_string(dim_) + " entries per row");
                auto value = entry();
                if (!value.is_zero()) t.push_back({r, c, value});
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (c + 1 != dim_) fail("expected " + std::to_string(dim_) + " entries per row");
                expect(']');
                break;
            }
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (r + 1 != dim_) fail("expected " + std::to_string(dim_) + " rows");
            expect(']');
            break;
        }
        skip_ws();
        if (pos_ != end_) fail("unexpected text after matrix literal");
        return SparseMatrix::from_triplets(dim_, dim_, t);
    }

   private:
    char peek() const { return pos_ < end_ ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < end_ && is_space(s_[pos_])) ++pos_;
    }
    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, line_, pos_ + 1); }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    GaussianRational entry() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < end_ && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != '[') ++pos_;
        auto [b, e] = trim(s_, start, pos_);
        if (b == e) {
            pos_ = start;
            fail("expected a matrix entry");
        }
        try {
            return GaussianRational::parse(s_.substr(b, e - b));
        } catch (const ParseError &err) {
            throw ParseError(err.detail(), line_, b + err.column());
        }
    }

    std::string_view s_;
    std::size_t pos_;
    std::size_t end_;
    std::size_t line_;
    std::size_t dim_;
};

}  // namespace

std::size_t InstanceFile::dim() const { return mode == InstanceMode::Qubits ? std::size_t{1} << size : size; }

ProblemInstance InstanceFile::to_problem() const {
    ProblemInstance inst;
    inst.dim = dim();
    auto convert = [&](const std::vector<InstanceItem> &items, std::vector<SparseMatrix> &set,
                       std::vector<std::string> &labels) {
        for (const auto &item : items) {
            set.push_back(item.pauli ? skewify(*item.pauli) : GaussianRational::i() * *item.matrix);
            labels.push_back(item.label);
        }
    };
    convert(p, inst.p_set, inst.p_labels);
    convert(q, inst.q_set, inst.q_labels);
    inst.validate();
    return inst;
}

std::string matrix_literal(const SparseMatrix &m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.ncols(); ++j) {
            if (j) out += ", ";
            out += m.at(i, j).to_string();
        }
        out += "]";
    }
    return out + "]";
}

std::string InstanceFile::to_text() const {
    std::ostringstream out;
    out << "system: " << (mode == InstanceMode::Qubits ? "qubits " : "dim ") << size << "\n";
    auto emit = [&](const char *key, const std::vector<InstanceItem> &items) {
        if (items.empty()) return;
        out << key << ":";
        for (std::size_t k = 0; k < items.size(); ++k) {
            out << (k ? "; " : " ") << items[k].label << " = "
                << (items[k].pauli ? items[k].pauli->to_string() : matrix_literal(*items[k].matrix));
        }
        out << "\n";
    };
    emit("P", p);
    emit("Q", q);
    return out.str();
}

InstanceFile parse_instance_file(std::string_view text) {
    InstanceFile file;
    bool have_system = false;
    std::set<std::string> labels;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto [b, e] = trim(line, 0, line.size());
        if (b == e) continue;

        std::size_t colon = line.find(':', b);
        if (colon == std::string_view::npos) throw ParseError("expected 'system:', 'P:' or 'Q:'", line_no, b + 1);
        auto [kb, ke] = trim(line, b, colon);
        std::string_view key = line.substr(kb, ke - kb);

        if (key == "system") {
            if (have_system) throw ParseError("duplicate 'system:' line", line_no, b + 1);
            std::istringstream words(std::string(line.substr(colon + 1, e - colon - 1)));
            std::string kind, count, extra;
            words >> kind >> count >> extra;
            // 0-based line position of the k-th word after the colon.
            auto word_at = [&](int k) {
                std::size_t i = colon + 1;
                for (int w = 0;; ++w) {
                    while (i < e && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                    if (w == k || i >= e) return i;
                    while (i < e && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                }
            };
            if (kind != "qubits" && kind != "dim") {
                throw ParseError("expected 'qubits <n>' or 'dim <d>' after 'system:'", line_no, word_at(0) + 1);
            }
            bool digits = !count.empty() && count.size() < 7 &&
                          count.find_first_not_of("0123456789") == std::string::npos;
            std::size_t value = digits ? std::stoul(count) : 0;
            std::size_t limit = kind == "qubits" ? kMaxQubits : kMaxDim;
            if (!digits || value == 0 || value > limit || !extra.empty()) {
                throw ParseError("expected a size between 1 and " + std::to_string(limit) + " after '" + kind + "'",
                                 line_no, word_at(count.empty() ? 0 : 1) + 1);
            }
            file.mode = kind == "qubits" ? InstanceMode::Qubits : InstanceMode::Matrix;
            file.size = value;
            have_system = true;
            continue;
        }
        if (key != "P" && key != "Q") throw ParseError("expected 'system:', 'P:' or 'Q:'", line_no, kb + 1);
        if (!have_system) throw ParseError("'system:' must come before generator lines", line_no, kb + 1);
        auto &items = key == "P" ? file.p : file.q;

        std::size_t start = colon + 1;
        if (trim(line, start, e).first == e) continue;  // "Q:" with no items
        // ';' never appears inside an item, so a plain split is enough.
        for (;;) {
            std::size_t semi = line.find(';', start);
            std::size_t stop = semi == std::string_view::npos ? e : semi;
            auto [ib, ie] = trim(line, start, stop);
            if (ib == ie) throw ParseError("empty item", line_no, start + 1);

            InstanceItem item;
            std::size_t expr_begin = ib;
            std::size_t eq = line.find('=', ib);
            if (eq != std::string_view::npos && eq < ie) {
                auto [lb, le] = trim(line, ib, eq);
                std::string_view label = line.substr(lb, le - lb);
                if (!is_identifier(label)) throw ParseError("invalid label '" + std::string(label) + "'", line_no, lb + 1);
                item.label = std::string(label);
                expr_begin = trim(line, eq + 1, ie).first;
                if (expr_begin == ie) throw ParseError("missing expression after '='", line_no, eq + 2);
            } else {
                item.label = std::string(key) + std::to_string(items.size() + 1);
            }
            if (!labels.insert(item.label).second) {
                throw ParseError("duplicate label '" + item.label + "'", line_no, ib + 1);
            }
            if (file.mode == InstanceMode::Qubits) {
                item.pauli = parse_pauli(line.substr(expr_begin, ie - expr_begin), file.size, line_no, expr_begin);
            } else {
                item.matrix = MatrixLiteralParser(line, expr_begin, ie, line_no, file.size).parse();
            }
            items.push_back(std::move(item));
            if (semi == std::string_view::npos || semi >= e) break;
            start = semi + 1;
        }
    }
    if (!have_system) throw ParseError("missing 'system:' line", line_no, 1);
    return file;
}

InstanceFile load_instance_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_error(ErrorCode::Io, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_file(buf.str());
}

InstanceFile instance_file_from_model(const PauliModel &model) {
    InstanceFile file;
    file.mode = InstanceMode::Qubits;
    file.size = model.nqubits;
    for (const auto &g : model.p) file.p.push_back({g.label, g.hamiltonian, std::nullopt});
    for (const auto &g : model.q) file.q.push_back({g.label, g.hamiltonian, std::nullopt});
    return file;
}

}  // namespace qsym
