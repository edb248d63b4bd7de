#include "hecke/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

namespace hecke {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t b) {
    std::int64_t m = a % b;
    return m < 0 ? m + b : m;
}

}  // namespace

AffinePerm::AffinePerm(int rank, Window window) : rank_(rank), w_(std::move(window)) {
    if (rank_ < 1) throw Error(Errc::BadInput, "rank must be at least 1");
    if (static_cast<int>(w_.size()) != rank_)
        throw Error(Errc::RankMismatch, "window arity does not match rank");
    std::set<std::int64_t> residues;
    std::int64_t sum = 0;
    for (int i = 0; i < rank_; ++i) {
        residues.insert(pos_mod(w_[static_cast<std::size_t>(i)], rank_));
        sum += w_[static_cast<std::size_t>(i)] - (i + 1);
    }
    if (static_cast<int>(residues.size()) != rank_)
        throw Error(Errc::BadInput, "window residues mod rank are not distinct");
    if (pos_mod(sum, rank_) != 0)
        throw Error(Errc::BadInput, "window displacement sum is not divisible by rank");
}

AffinePerm AffinePerm::identity(int rank) {
    Window w(static_cast<std::size_t>(rank));
    std::iota(w.begin(), w.end(), 1);
    return AffinePerm(rank, std::move(w));
}

std::int64_t AffinePerm::at(std::int64_t i) const {
    std::int64_t s = pos_mod(i - 1, rank_) + 1;
    std::int64_t q = (i - s) / rank_;
    return w_[static_cast<std::size_t>(s - 1)] + q * rank_;
}

std::int64_t AffinePerm::omega_power() const {
    std::int64_t sum = 0;
    for (int i = 0; i < rank_; ++i) sum += w_[static_cast<std::size_t>(i)] - (i + 1);
    return -(sum / rank_);
}

std::int64_t AffinePerm::length() const {
    std::int64_t len = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j) {
            std::int64_t d = floor_div(w_[static_cast<std::size_t>(j)] - w_[static_cast<std::size_t>(i)],
                                       rank_);
            len += d < 0 ? -d : d;
        }
    return len;
}

bool AffinePerm::right_descent(int i) const {
    if (i < 0 || i >= rank_) throw Error(Errc::IndexOutOfRange, "descent index out of range");
    if (i == 0) return w_[static_cast<std::size_t>(rank_ - 1)] - rank_ > w_[0];
    return w_[static_cast<std::size_t>(i - 1)] > w_[static_cast<std::size_t>(i)];
}

AffinePerm AffinePerm::times_s(int i) const {
    if (i < 0 || i >= rank_) throw Error(Errc::IndexOutOfRange, "generator index out of range");
    Window w = w_;
    if (i == 0) {
        std::int64_t first = w[0];
        w[0] = w[static_cast<std::size_t>(rank_ - 1)] - rank_;
        w[static_cast<std::size_t>(rank_ - 1)] = first + rank_;
    } else {
        std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    }
    return AffinePerm(rank_, std::move(w));
}

AffinePerm AffinePerm::times_t(std::int64_t k) const {
    Window w(static_cast<std::size_t>(rank_));
    for (int i = 1; i <= rank_; ++i) w[static_cast<std::size_t>(i - 1)] = at(i - k);
    return AffinePerm(rank_, std::move(w));
}

AffinePerm AffinePerm::omega_shifted(std::int64_t k) const {
    Window w = w_;
    for (auto& x : w) x -= k;
    return AffinePerm(rank_, std::move(w));
}

bool AffinePerm::is_identity() const {
    for (int i = 0; i < rank_; ++i)
        if (w_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

std::strong_ordering operator<=>(const AffinePerm& a, const AffinePerm& b) {
    if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
    return a.w_ <=> b.w_;
}

std::string AffinePerm::str() const {
    std::string s = "T(";
    for (int i = 0; i < rank_; ++i) {
        if (i) s += ",";
        s += std::to_string(w_[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

AffinePerm compose(const AffinePerm& u, const AffinePerm& w) {
    if (u.rank() != w.rank()) throw Error(Errc::RankMismatch, "composing permutations of different ranks");
    Window out(static_cast<std::size_t>(u.rank()));
    for (int i = 1; i <= u.rank(); ++i) out[static_cast<std::size_t>(i - 1)] = u.at(w.at(i));
    return AffinePerm(u.rank(), std::move(out));
}

AffinePerm generator(int rank, GenName which) {
    switch (which.kind) {
        case GenName::Kind::S: {
            if (rank < 2) throw Error(Errc::IndexOutOfRange, "s-generators need rank >= 2");
            if (which.index < 0 || which.index >= rank)
                throw Error(Errc::IndexOutOfRange, "generator index out of range");
            return AffinePerm::identity(rank).times_s(which.index);
        }
        case GenName::Kind::T:
            return t_power(rank, 1);
        case GenName::Kind::TInv:
            return t_power(rank, -1);
    }
    throw Error(Errc::BadInput, "unknown generator");
}

AffinePerm t_power(int rank, std::int64_t k) {
    Window w(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) w[static_cast<std::size_t>(i - 1)] = i - k;
    return AffinePerm(rank, std::move(w));
}

ReducedDecomposition reduced_decomposition(const AffinePerm& w, TieBreak tie) {
    ReducedDecomposition rd;
    rd.omega_power = w.omega_power();
    AffinePerm u = w.omega_shifted(-rd.omega_power);  // t^{-k} * w, degree zero
    while (!u.is_identity()) {
        int pick = -1;
        if (tie == TieBreak::SmallestIndex) {
            for (int i = 0; i < w.rank(); ++i)
                if (u.right_descent(i)) {
                    pick = i;
                    break;
                }
        } else {
            for (int i = w.rank() - 1; i >= 0; --i)
                if (u.right_descent(i)) {
                    pick = i;
                    break;
                }
        }
        rd.word.push_back(pick);
        u = u.times_s(pick);
    }
    std::reverse(rd.word.begin(), rd.word.end());
    return rd;
}

AffinePerm reassemble(int rank, const ReducedDecomposition& rd) {
    AffinePerm x = AffinePerm::identity(rank);
    for (int i : rd.word) x = x.times_s(i);
    return x.omega_shifted(rd.omega_power);
}

int length_guard_cap() {
    int cap = 8;
    if (const char* env = std::getenv("HECKE_MAX_LEN")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) cap = static_cast<int>(std::min(v, 10L));
    }
    return cap;
}

std::map<AffinePerm, int> bfs_ball(int rank, int max_len) {
    if (rank < 1 || rank > 6)
        throw Error(Errc::ResourceLimit, "bfs_ball supports ranks 1..6");
    if (max_len < 0 || max_len > length_guard_cap())
        throw Error(Errc::ResourceLimit,
                    "bfs_ball length bound exceeds the guard (" + std::to_string(length_guard_cap()) + ")");

    std::map<AffinePerm, int> coxeter;
    std::deque<AffinePerm> frontier;
    AffinePerm id = AffinePerm::identity(rank);
    coxeter.emplace(id, 0);
    frontier.push_back(id);
    // rank 1 has no simple reflections; the degree-zero part is trivial
    int ngens = rank >= 2 ? rank : 0;
    while (!frontier.empty()) {
        AffinePerm u = frontier.front();
        frontier.pop_front();
        int d = coxeter.at(u);
        if (d == max_len) continue;
        for (int i = 0; i < ngens; ++i) {
            AffinePerm nu = u.times_s(i);
            if (coxeter.emplace(nu, d + 1).second) frontier.push_back(nu);
        }
    }

    std::map<AffinePerm, int> ball;
    for (std::int64_t k = -max_len; k <= max_len; ++k)
        for (const auto& [u, d] : coxeter) ball.emplace(u.omega_shifted(k), d);
    return ball;
}

}  // namespace hecke
