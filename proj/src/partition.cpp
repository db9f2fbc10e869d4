#include "mbar/partition.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mbar {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

void Partition::normalize() {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::ones(int n) {
    Partition p;
    p.parts_.assign(n, 1);
    p.weight_ = n;
    return p;
}

Partition Partition::single(int m) {
    Partition p;
    if (m > 0) {
        p.parts_ = {m};
        p.weight_ = m;
    }
    return p;
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<std::pair<int, int>> Partition::mults() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        out.emplace_back(parts_[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

BigRat Partition::z() const {
    BigRat z(1);
    for (auto [part, mult] : mults()) {
        for (int i = 0; i < mult; ++i) z *= part;
        z *= factorial(static_cast<unsigned>(mult));
    }
    return z;
}

Partition Partition::merged(const Partition& o) const {
    std::vector<int> v = parts_;
    v.insert(v.end(), o.parts_.begin(), o.parts_.end());
    return Partition(std::move(v));
}

Partition Partition::scaled(int k) const {
    std::vector<int> v = parts_;
    for (int& p : v) p *= k;
    return Partition(std::move(v));
}

bool Partition::remove_one_part(int m, Partition* out) const {
    auto it = std::find(parts_.begin(), parts_.end(), m);
    if (it == parts_.end()) return false;
    std::vector<int> v;
    v.reserve(parts_.size() - 1);
    v.insert(v.end(), parts_.begin(), it);
    v.insert(v.end(), std::next(it), parts_.end());
    Partition p;
    p.parts_ = std::move(v);
    p.weight_ = weight_ - m;
    *out = std::move(p);
    return true;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = weight_ <=> o.weight_; c != 0) return c;
    return parts_ <=> o.parts_;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    if (n >= 0) {
        std::vector<int> cur;
        gen_partitions(n, n == 0 ? 1 : n, cur, out);
        std::sort(out.begin(), out.end());
    }
    return cache.emplace(n, std::move(out)).first->second;
}

int mobius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

int totient(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

}  // namespace mbar
