#include "ggl/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ggl {

namespace {

IntMat rows_to_mat(const std::vector<Character>& rows, int cols) {
    IntMat m((int)rows.size(), cols);
    for (int i = 0; i < (int)rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("groups: character length mismatch");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i].e[j];
    }
    return m;
}

std::vector<long long> trim_split(const std::string& s, char sep) {
    std::vector<long long> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        size_t a = cur.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = cur.find_last_not_of(" \t");
        out.push_back(std::stoll(cur.substr(a, b - a + 1)));
    }
    return out;
}

}  // namespace

bool Character::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
}

Character Character::operator+(const Character& o) const {
    if (e.size() != o.e.size()) throw std::invalid_argument("groups: character length mismatch");
    Character r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Character Character::operator-() const {
    Character r(*this);
    for (auto& x : r.e) x = -x;
    return r;
}

Character Character::operator*(long long n) const {
    Character r(*this);
    for (auto& x : r.e) x *= n;
    return r;
}

std::string Character::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) out << ",";
        out << e[i];
    }
    return out.str();
}

GroupSpec GroupSpec::torus(int rank) {
    if (rank < 0) throw std::invalid_argument("groups: negative rank");
    return GroupSpec(Kind::Torus, rank, {});
}

GroupSpec GroupSpec::elem2(int rank) {
    if (rank < 0) throw std::invalid_argument("groups: negative rank");
    return GroupSpec(Kind::Elem2, rank, {});
}

GroupSpec GroupSpec::quotient(int ambient_rank, std::vector<Character> kernel_chars) {
    if (kernel_chars.empty()) return torus(ambient_rank);
    for (auto& v : kernel_chars)
        if (v.size() != ambient_rank)
            throw std::invalid_argument("groups: kernel character length mismatch");
    return GroupSpec(Kind::Quotient, ambient_rank, std::move(kernel_chars));
}

GroupSpec GroupSpec::parse(const std::string& raw, bool torus_family) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    if (s.empty()) throw std::invalid_argument("groups: empty group spec");
    if (s == "1") return torus_family ? trivial() : elem2(0);

    auto read_rank = [&s](const std::string& t, size_t pos) -> int {
        if (pos >= t.size()) return 1;
        if (t[pos] != '^') throw std::invalid_argument("groups: cannot parse '" + s + "'");
        return std::stoi(t.substr(pos + 1));
    };

    size_t slash = s.find('/');
    std::string head = slash == std::string::npos ? s : s.substr(0, slash);

    if (head.rfind("C2", 0) == 0 && (head.size() == 2 || head[2] == '^')) {
        int rank = read_rank(head, 2);
        if (slash != std::string::npos)
            throw std::invalid_argument("groups: quotients of C2^r are not supported");
        if (!torus_family) return GroupSpec::elem2(rank);
        // in the torus family C2^r means the product of cyclic C_2's
        std::vector<Character> kernel;
        for (int i = 0; i < rank; ++i) {
            std::vector<long long> v(rank, 0);
            v[i] = 2;
            kernel.push_back(Character(v));
        }
        return quotient(rank, kernel);
    }
    if (head[0] == 'C') {
        // cyclic group C_n = T^1/[n]
        long long n = std::stoll(head.substr(1));
        if (slash != std::string::npos || !torus_family)
            throw std::invalid_argument("groups: cannot parse '" + s + "'");
        return quotient(1, {Character{n}});
    }
    if (head[0] != 'T') throw std::invalid_argument("groups: cannot parse '" + s + "'");
    int rank = read_rank(head, 1);
    if (slash == std::string::npos) return torus(rank);

    std::string tail = s.substr(slash + 1);
    if (tail.size() < 2 || tail.front() != '[' || tail.back() != ']')
        throw std::invalid_argument("groups: kernel list must be bracketed: '" + s + "'");
    tail = tail.substr(1, tail.size() - 2);
    std::vector<Character> kernel;
    std::istringstream in(tail);
    std::string part;
    while (std::getline(in, part, ';')) {
        auto entries = trim_split(part, ',');
        if ((int)entries.size() != rank)
            throw std::invalid_argument("groups: kernel character length mismatch in '" + s + "'");
        kernel.push_back(Character(entries));
    }
    return quotient(rank, kernel);
}

bool GroupSpec::is_trivial() const {
    return kind_ != Kind::Quotient && rank_ == 0;
}

std::string GroupSpec::str() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::Torus:
            if (rank_ == 0) return "1";
            out << "T^" << rank_;
            break;
        case Kind::Elem2:
            out << "C2^" << rank_;
            break;
        case Kind::Quotient: {
            out << "T^" << rank_ << "/[";
            for (size_t i = 0; i < kernel_.size(); ++i) {
                if (i) out << "; ";
                out << kernel_[i].str();
            }
            out << "]";
            break;
        }
    }
    return out.str();
}

bool GroupSpec::operator==(const GroupSpec& o) const {
    return kind_ == o.kind_ && rank_ == o.rank_ && kernel_ == o.kernel_;
}

GroupHom GroupHom::identity(const GroupSpec& g) {
    GroupHom h{g, g, {}};
    h.m.assign(g.rank(), std::vector<long long>(g.rank(), 0));
    for (int i = 0; i < g.rank(); ++i) h.m[i][i] = 1;
    return h;
}

GroupHom GroupHom::to_trivial(const GroupSpec& g) {
    GroupSpec t = g.kind() == GroupSpec::Kind::Elem2 ? GroupSpec::elem2(0) : GroupSpec::trivial();
    return GroupHom{g, t, {}};
}

GroupHom GroupHom::from_trivial(const GroupSpec& g) {
    GroupSpec t = g.kind() == GroupSpec::Kind::Elem2 ? GroupSpec::elem2(0) : GroupSpec::trivial();
    GroupHom h{t, g, {}};
    h.m.assign(g.rank(), std::vector<long long>{});
    return h;
}

GroupHom GroupHom::from_character(const GroupSpec& source, const Character& v) {
    if (v.size() != source.rank())
        throw std::invalid_argument("groups: character length does not match group rank");
    GroupSpec target =
        source.kind() == GroupSpec::Kind::Elem2 ? GroupSpec::elem2(1) : GroupSpec::torus(1);
    GroupHom h{source, target, {std::vector<long long>(v.e)}};
    return h;
}

void GroupHom::validate() const {
    if ((int)m.size() != target.rank())
        throw std::invalid_argument("groups: hom matrix must have one row per target generator");
    for (const auto& row : m)
        if ((int)row.size() != source.rank())
            throw std::invalid_argument("groups: hom matrix must have one column per source generator");
    bool e2s = source.kind() == GroupSpec::Kind::Elem2;
    bool e2t = target.kind() == GroupSpec::Kind::Elem2;
    if (e2s != e2t) throw std::invalid_argument("groups: hom mixes torus and C2^r families");
    // quotient sources/targets: target kernel characters must pull back into
    // the source kernel lattice
    if (target.kind() == GroupSpec::Kind::Quotient) {
        RowHnf src_lattice;
        bool have = false;
        if (source.kind() == GroupSpec::Kind::Quotient) {
            src_lattice = row_hnf(rows_to_mat(source.kernel_chars(), source.rank()));
            have = true;
        }
        for (const auto& v : target.kernel_chars()) {
            Character image = char_pullback(v, *this);
            if (!have) {
                if (!image.is_zero())
                    throw std::invalid_argument("groups: hom does not descend to the quotient");
            } else {
                std::vector<Int> w(image.size());
                for (int i = 0; i < image.size(); ++i) w[i] = image.e[i];
                if (!in_row_lattice(src_lattice, w))
                    throw std::invalid_argument("groups: hom does not descend to the quotient");
            }
        }
    }
}

std::string GroupHom::str() const {
    std::ostringstream out;
    out << source.str() << " -> " << target.str() << " [";
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) out << "; ";
        for (size_t j = 0; j < m[i].size(); ++j) {
            if (j) out << ",";
            out << m[i][j];
        }
    }
    out << "]";
    return out.str();
}

Character char_pullback(const Character& v, const GroupHom& alpha) {
    if (v.size() != alpha.target.rank())
        throw std::invalid_argument("groups: character is not a character of the hom target");
    std::vector<long long> out(alpha.source.rank(), 0);
    for (int i = 0; i < alpha.target.rank(); ++i)
        for (int j = 0; j < alpha.source.rank(); ++j) out[j] += v.e[i] * alpha.m[i][j];
    if (alpha.source.kind() == GroupSpec::Kind::Elem2)
        for (auto& x : out) x = ((x % 2) + 2) % 2;
    return Character(out);
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
    if (!(inner.target == outer.source))
        throw std::invalid_argument("groups: hom composition mismatch");
    GroupHom h{inner.source, outer.target, {}};
    int rows = outer.target.rank(), mid = outer.source.rank(), cols = inner.source.rank();
    h.m.assign(rows, std::vector<long long>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < mid; ++k)
            for (int j = 0; j < cols; ++j) h.m[i][j] += outer.m[i][k] * inner.m[k][j];
    if (h.source.kind() == GroupSpec::Kind::Elem2)
        for (auto& row : h.m)
            for (auto& x : row) x = ((x % 2) + 2) % 2;
    return h;
}

PrimitiveSplit primitive_and_split(const Character& v) {
    if (v.is_zero()) throw std::invalid_argument("groups: zero character has no primitive part");
    long long d = 0;
    for (long long x : v.e) d = std::gcd(d, x < 0 ? -x : x);
    Character w(v);
    for (auto& x : w.e) x /= d;
    return PrimitiveSplit{d, w, d == 1};
}

KernelData kernel_subgroup(const Character& v) {
    if (v.is_zero()) throw std::invalid_argument("groups: kernel of the zero character");
    int r = v.size();
    KernelData out;
    out.subgroup = GroupSpec::quotient(r, {v});
    auto ps = primitive_and_split(v);
    out.split = ps.split;
    if (!ps.split) return out;

    std::vector<Int> row(r);
    for (int i = 0; i < r; ++i) row[i] = v.e[i];
    auto sp = split_row(row);  // v * u = (1, 0, ..., 0)
    out.kernel_rank = r - 1;
    GroupSpec kt = GroupSpec::torus(r - 1);
    GroupSpec amb = GroupSpec::torus(r);

    // embedding T^{r-1} -> T^r: columns 2..r of u
    GroupHom emb{kt, amb, std::vector<std::vector<long long>>(r, std::vector<long long>(r - 1))};
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r - 1; ++j) emb.m[i][j] = sp.u.at(i, j + 1).convert_to<long long>();
    // retraction T^r -> T^{r-1}: rows 2..r of u^{-1}
    GroupHom ret{amb, kt, std::vector<std::vector<long long>>(r - 1, std::vector<long long>(r))};
    for (int i = 0; i < r - 1; ++i)
        for (int j = 0; j < r; ++j) ret.m[i][j] = sp.uinv.at(i + 1, j).convert_to<long long>();
    // section T -> T^r: first column of u
    GroupHom sec{GroupSpec::torus(1), amb, std::vector<std::vector<long long>>(r, std::vector<long long>(1))};
    for (int i = 0; i < r; ++i) sec.m[i][0] = sp.u.at(i, 0).convert_to<long long>();

    out.embedding = emb;
    out.retraction = ret;
    out.section = sec;
    return out;
}

KernelData kernel_subgroup_elem2(const Character& v) {
    if (v.is_zero()) throw std::invalid_argument("groups: kernel of the zero character");
    int r = v.size();
    std::vector<int> vv(r);
    for (int i = 0; i < r; ++i) vv[i] = (int)(((v.e[i] % 2) + 2) % 2);
    if (std::all_of(vv.begin(), vv.end(), [](int x) { return x == 0; }))
        throw std::invalid_argument("groups: kernel of the zero character");
    auto basis = f2::complete_to_basis(vv);  // col 0 = section, cols 1.. span ker
    auto inv = f2::inverse(basis);
    KernelData out;
    out.split = true;
    out.kernel_rank = r - 1;
    out.subgroup = GroupSpec::elem2(r - 1);
    GroupSpec amb = GroupSpec::elem2(r);
    GroupHom emb{out.subgroup, amb, std::vector<std::vector<long long>>(r, std::vector<long long>(r - 1))};
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r - 1; ++j) emb.m[i][j] = basis[i][j + 1];
    GroupHom ret{amb, out.subgroup, std::vector<std::vector<long long>>(r - 1, std::vector<long long>(r))};
    for (int i = 0; i < r - 1; ++i)
        for (int j = 0; j < r; ++j) ret.m[i][j] = inv[i + 1][j];
    GroupHom sec{GroupSpec::elem2(1), amb, std::vector<std::vector<long long>>(r, std::vector<long long>(1))};
    for (int i = 0; i < r; ++i) sec.m[i][0] = basis[i][0];
    out.embedding = emb;
    out.retraction = ret;
    out.section = sec;
    return out;
}

}  // namespace ggl
