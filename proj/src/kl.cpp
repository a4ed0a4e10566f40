#include "klforge/kl.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "kl/column_engine.hpp"
#include "klforge/errors.hpp"
#include "klforge/json_io.hpp"

namespace klforge {

namespace {

using detail::ColumnEngine;

template <class C>
QCoeffs to_qcoeffs(const std::vector<C>& p) {
    QCoeffs out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!detail::CoeffOps<C>::is_zero(p[i]))
            out.emplace(static_cast<int>(i), detail::CoeffOps<C>::to_integer(p[i]));
    return out;
}

Permutation conjugate_by_longest(const Permutation& w) {
    const auto w0 = Permutation::longest(w.size());
    return w0 * w * w0;
}

}  // namespace

struct KLTable::Engines {
    struct Slot {
        std::mutex mutex;
        std::unique_ptr<ColumnEngine<std::int64_t>> small;
        std::unique_ptr<ColumnEngine<mpz_class>> big;
    };
    std::array<Slot, detail::kMaxPackedSize + 1> slots;
};

KLTable::KLTable(int threads) : threads_(std::max(1, threads)), engines_(std::make_unique<Engines>()) {}

KLTable::~KLTable() { flush(); }

void KLTable::set_threads(int threads) { threads_ = std::max(1, threads); }

std::size_t KLTable::memo_size() const {
    std::shared_lock lock(memo_mutex_);
    return memo_.size();
}

KLTable::Key KLTable::normalize(const Permutation& x, const Permutation& y) {
    const Permutation xi = x.inverse(), yi = y.inverse();
    std::array<std::pair<Permutation, Permutation>, 4> variants{{
        {x, y},
        {xi, yi},
        {conjugate_by_longest(x), conjugate_by_longest(y)},
        {conjugate_by_longest(xi), conjugate_by_longest(yi)},
    }};
    auto best = variants[0];
    for (const auto& v : variants)
        if (std::tie(v.second, v.first) < std::tie(best.second, best.first)) best = v;
    return {x.size(), best.first.word(), best.second.word()};
}

LaurentPoly KLTable::kl_poly(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size()) throw InvalidArgument("permutations of different sizes");
    if (x.size() > detail::kMaxPackedSize)
        throw InvalidArgument("KL polynomials are supported for n <= " + std::to_string(detail::kMaxPackedSize));
    if (!bruhat_leq(x, y)) return {};
    if (y.length() - x.length() <= 2) return LaurentPoly(1);

    const Key key = normalize(x, y);
    {
        std::shared_lock lock(memo_mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return LaurentPoly::from_q(it->second);
    }
    QCoeffs value = compute(Permutation(std::get<1>(key)), Permutation(std::get<2>(key)));
    bool inserted = false;
    {
        std::unique_lock lock(memo_mutex_);
        inserted = memo_.emplace(key, value).second;
    }
    if (inserted) persist(key, value);
    return LaurentPoly::from_q(value);
}

template <class F>
QCoeffs KLTable::with_engine(int n, F&& f) {
    auto& slot = engines_->slots[static_cast<std::size_t>(n)];
    std::lock_guard lock(slot.mutex);
    if (!slot.big) {
        try {
            if (!slot.small) slot.small = std::make_unique<ColumnEngine<std::int64_t>>(n);
            slot.small->set_threads(threads_);
            return f(*slot.small);
        } catch (const detail::CoefficientOverflow&) {
            slot.small.reset();
            slot.big = std::make_unique<ColumnEngine<mpz_class>>(n);
        }
    }
    slot.big->set_threads(threads_);
    return f(*slot.big);
}

QCoeffs KLTable::compute(const Permutation& x, const Permutation& y) {
    const auto px = detail::pack(x), py = detail::pack(y);
    return with_engine(x.size(), [&](auto& engine) { return to_qcoeffs(engine.poly(px, py)); });
}

LaurentPoly KLTable::signed_kl_sum(const std::vector<Permutation>& xs, const Permutation& y) {
    if (y.size() > detail::kMaxPackedSize)
        throw InvalidArgument("KL polynomials are supported for n <= " + std::to_string(detail::kMaxPackedSize));
    std::vector<detail::Packed> packed;
    packed.reserve(xs.size());
    for (const auto& x : xs) {
        if (x.size() != y.size()) throw InvalidArgument("permutations of different sizes");
        packed.push_back(detail::pack(x));
    }
    const auto py = detail::pack(y);
    return LaurentPoly::from_q(
        with_engine(y.size(), [&](auto& engine) { return to_qcoeffs(engine.signed_sum(packed, py)); }));
}

void KLTable::attach_cache(const std::filesystem::path& path) {
    std::lock_guard file_lock(file_mutex_);
    cache_file_.reset();
    cache_path_ = path;
    std::uintmax_t good_bytes = 0;
    {
        std::ifstream in(path, std::ios::binary);
        std::string line;
        std::unique_lock lock(memo_mutex_);
        while (in) {
            if (!std::getline(in, line)) break;
            if (in.eof()) break;  // no trailing newline: record was cut short
            try {
                const Json j = Json::parse(line);
                Key key{j.at("n").get<int>(), j.at("s").get<std::vector<int>>(), j.at("w").get<std::vector<int>>()};
                const Permutation s(std::get<1>(key)), w(std::get<2>(key));
                if (s.size() != std::get<0>(key) || w.size() != std::get<0>(key)) break;
                memo_.emplace(std::move(key), qcoeffs_from_json(j.at("p")));
                ++loaded_;
            } catch (const std::exception&) {
                break;
            }
            good_bytes += line.size() + 1;
        }
    }
    std::error_code ec;
    if (std::filesystem::exists(path, ec) && std::filesystem::file_size(path, ec) != good_bytes)
        std::filesystem::resize_file(path, good_bytes, ec);
    cache_file_.reset(std::fopen(path.c_str(), "ab"));
    if (!cache_file_) throw InvalidArgument("cannot open cache file " + path.string());
}

void KLTable::persist(const Key& key, const QCoeffs& value) {
    std::lock_guard lock(file_mutex_);
    if (!cache_file_) return;
    Json j{{"n", std::get<0>(key)}, {"s", std::get<1>(key)}, {"w", std::get<2>(key)}, {"p", qcoeffs_to_json(value)}};
    const std::string line = j.dump() + "\n";
    std::fwrite(line.data(), 1, line.size(), cache_file_.get());
}

void KLTable::flush() {
    std::lock_guard lock(file_mutex_);
    if (cache_file_) std::fflush(cache_file_.get());
}

LaurentPoly kl_poly(KLTable& table, const Permutation& x, const Permutation& y) { return table.kl_poly(x, y); }

LaurentPoly parabolic_kl_q(KLTable& table, const Permutation& s, const Permutation& w, int m) {
    if (m < 1) throw InvalidArgument("m must be positive");
    if (s.size() != w.size()) throw InvalidArgument("permutations of different sizes");
    const Permutation ts = replicate_perm(s, m), tw = replicate_perm(w, m);
    if (!bruhat_leq(ts, tw)) throw NotComparable(s.to_string() + " and " + w.to_string() + " at m=" + std::to_string(m));
    const int budget = tw.length() - ts.length();
    std::vector<Permutation> xs;
    for (const auto& x : ParabolicShape::uniform(s.size(), m).elements())
        if (x.length() <= budget) xs.push_back(ts * x);
    LaurentPoly sum = table.signed_kl_sum(xs, tw);
    if (ts.length() % 2 != 0) sum = -sum;
    return sum;
}

LaurentPoly parabolic_kl_neg1(KLTable& table, const Permutation& s, const Permutation& w, int m) {
    if (m < 1) throw InvalidArgument("m must be positive");
    if (s.size() != w.size()) throw InvalidArgument("permutations of different sizes");
    const Permutation ts = replicate_perm(s, m), tw = replicate_perm(w, m);
    if (!bruhat_leq(ts, tw)) throw NotComparable(s.to_string() + " and " + w.to_string() + " at m=" + std::to_string(m));
    const Permutation wm = ParabolicShape::uniform(s.size(), m).longest();
    return table.kl_poly(ts * wm, tw * wm);
}

bool kl_inversion_check(KLTable& table, const Permutation& s, const Permutation& w) {
    const Permutation w0 = Permutation::longest(w.size());
    LaurentPoly sum;
    for (const auto& x : enumerate_interval(s, w)) {
        LaurentPoly term = table.kl_poly(s, x) * table.kl_poly(w0 * w, w0 * x);
        if ((x.length() - s.length()) % 2 != 0) term = -term;
        sum += term;
    }
    return s == w ? sum.is_one() : sum.is_zero();
}

}  // namespace klforge
