#include "idemca/finite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace idemca {

FiniteFunction FiniteFunction::identity(int domain_size) {
    FiniteFunction f;
    f.images.resize(static_cast<std::size_t>(domain_size));
    for (int i = 0; i < domain_size; ++i) f.images[static_cast<std::size_t>(i)] = i;
    return f;
}

bool FiniteFunction::is_identity() const {
    for (int i = 0; i < domain_size(); ++i)
        if (apply(i) != i) return false;
    return true;
}

bool FiniteFunction::is_bijection() const {
    std::vector<char> hit(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= domain_size() || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool FiniteFunction::is_idempotent() const {
    for (int i = 0; i < domain_size(); ++i)
        if (apply(apply(i)) != apply(i)) return false;
    return true;
}

FiniteFunction compose(const FiniteFunction& f, const FiniteFunction& g) {
    if (f.domain_size() != g.domain_size())
        throw std::invalid_argument("composing functions over different domains");
    FiniteFunction h;
    h.images.resize(g.images.size());
    for (int x = 0; x < g.domain_size(); ++x)
        h.images[static_cast<std::size_t>(x)] = f.apply(g.apply(x));
    return h;
}

namespace {

/// Idempotent mover: sends `from` to `to`, fixes everything else.
FiniteFunction mover(int domain_size, int from, int to) {
    FiniteFunction m = FiniteFunction::identity(domain_size);
    m.images[static_cast<std::size_t>(from)] = to;
    return m;
}

FiniteFunction compose_all_outermost_first(const std::vector<FiniteFunction>& factors, int n) {
    FiniteFunction acc = FiniteFunction::identity(n);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = compose(*it, acc);
    return acc;
}

}  // namespace

FiniteFactorization decompose_finite(const FiniteFunction& f) {
    const int n = f.domain_size();
    if (f.is_identity()) return {f, {}};
    if (f.is_bijection()) throw NotDecomposable();

    // Image of f and the least-preimage section g.
    std::set<int> image_set(f.images.begin(), f.images.end());
    std::map<int, int> section;  // b in f(X) -> least preimage
    for (int x = 0; x < n; ++x) {
        const int b = f.apply(x);
        if (!section.contains(b)) section[b] = x;
    }
    std::set<int> section_image;
    for (const auto& [b, a] : section) section_image.insert(a);

    std::vector<FiniteFunction> firing;  // innermost first

    // Movers a -> g(f(a)) for a outside g(f(X)); afterwards the composite
    // equals g o f, which fixes g(f(X)) pointwise.
    for (int a = 0; a < n; ++a) {
        if (section_image.contains(a)) continue;
        const int target = section.at(f.apply(a));
        if (target != a) firing.push_back(mover(n, a, target));
    }

    // Move the set g(f(X)) onto f(X): pair off the symmetric difference.
    std::vector<int> from_only, to_only;
    for (int a : section_image)
        if (!image_set.contains(a)) from_only.push_back(a);
    for (int b : image_set)
        if (!section_image.contains(b)) to_only.push_back(b);
    for (std::size_t i = 0; i < from_only.size(); ++i)
        firing.push_back(mover(n, from_only[i], to_only[i]));

    // Residual permutation of f(X): pi(theta(g(c))) = c.
    std::map<int, int> theta;  // on section_image
    for (int a : section_image) theta[a] = a;
    for (std::size_t i = 0; i < from_only.size(); ++i) theta[from_only[i]] = to_only[i];
    std::map<int, int> pi;
    for (int c : image_set) pi[theta.at(section.at(c))] = c;

    // Spare element outside f(X); exists since f is not surjective.
    int spare = -1;
    for (int x = 0; x < n; ++x)
        if (!image_set.contains(x)) {
            spare = x;
            break;
        }

    // Decompose pi into transposition triples through the spare element.
    std::set<int> done;
    for (int c0 : image_set) {
        if (done.contains(c0)) continue;
        std::vector<int> cycle{c0};
        done.insert(c0);
        for (int c = pi.at(c0); c != c0; c = pi.at(c)) {
            cycle.push_back(c);
            done.insert(c);
        }
        for (std::size_t j = 1; j < cycle.size(); ++j) {
            const int c = cycle[0];
            const int d = cycle[j];
            firing.push_back(mover(n, c, spare));
            firing.push_back(mover(n, d, c));
            firing.push_back(mover(n, spare, d));
        }
    }

    FiniteFactorization fact;
    fact.target = f;
    fact.factors.assign(firing.rbegin(), firing.rend());
    if (!(compose_all_outermost_first(fact.factors, n) == f))
        throw Error("finite factorization did not recompose to its target");
    return fact;
}

bool verify_factorization(const FiniteFactorization& fact) {
    const int n = fact.target.domain_size();
    for (const FiniteFunction& g : fact.factors) {
        if (g.domain_size() != n || !g.is_idempotent()) return false;
    }
    return compose_all_outermost_first(fact.factors, n) == fact.target;
}

PeriodicCarrier::PeriodicCarrier(int k, int m) : k_(k), m_(m) {
    if (k < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
    if (m < 0) throw std::invalid_argument("period bound must be non-negative");
    for (int p = 1; p <= m; ++p) {
        Word w(static_cast<std::size_t>(p), 0);
        do {
            if (least_cyclic_period(w) == p) points_.emplace_back(w);
        } while (next_word(w, k));
    }
    std::sort(points_.begin(), points_.end(), [](const CyclicWord& a, const CyclicWord& b) {
        if (a.least_period() != b.least_period()) return a.least_period() < b.least_period();
        return a.period_word() < b.period_word();
    });

    rotate_one_.resize(points_.size());
    orbit_of_.assign(points_.size(), -1);
    phase_of_.assign(points_.size(), 0);
    for (std::size_t i = 0; i < points_.size(); ++i) rotate_one_[i] = index_of(points_[i].rotate_left(1));

    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (orbit_of_[i] != -1) continue;
        const int orbit_id = static_cast<int>(orbits_.size());
        std::vector<int> members;
        int cursor = static_cast<int>(i);
        int phase = 0;
        do {
            orbit_of_[static_cast<std::size_t>(cursor)] = orbit_id;
            phase_of_[static_cast<std::size_t>(cursor)] = phase;
            members.push_back(cursor);
            cursor = rotate_one_[static_cast<std::size_t>(cursor)];
            ++phase;
        } while (cursor != static_cast<int>(i));
        orbit_reps_.push_back(static_cast<int>(i));  // points_ sorted, so i is lex-least
        std::sort(members.begin(), members.end());
        orbits_.push_back(std::move(members));
    }
}

int PeriodicCarrier::index_of(const CyclicWord& x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const CyclicWord& a, const CyclicWord& b) {
                                   if (a.least_period() != b.least_period())
                                       return a.least_period() < b.least_period();
                                   return a.period_word() < b.period_word();
                               });
    if (it == points_.end() || !(*it == x)) throw std::invalid_argument("point not in carrier");
    return static_cast<int>(it - points_.begin());
}

int PeriodicCarrier::rotate(int index, int amount) const {
    const int p = period(index);
    int s = amount % p;
    if (s < 0) s += p;
    int cursor = index;
    while (s--) cursor = rotate_one_[static_cast<std::size_t>(cursor)];
    return cursor;
}

const std::vector<int>& PeriodicCarrier::orbit(int orbit_id) const {
    return orbits_[static_cast<std::size_t>(orbit_id)];
}

int PeriodicCarrier::orbit_rep(int orbit_id) const {
    return orbit_reps_[static_cast<std::size_t>(orbit_id)];
}

int PeriodicCarrier::orbit_period(int orbit_id) const {
    return static_cast<int>(orbits_[static_cast<std::size_t>(orbit_id)].size());
}

int PeriodicCarrier::phase_of(int index) const {
    return phase_of_[static_cast<std::size_t>(index)];
}

EquivariantMap::EquivariantMap(std::shared_ptr<const PeriodicCarrier> carrier,
                               std::vector<int> images)
    : carrier_(std::move(carrier)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != carrier_->size())
        throw std::invalid_argument("image list does not match the carrier");
    for (int i = 0; i < carrier_->size(); ++i) {
        const int img = images_[static_cast<std::size_t>(i)];
        if (img < 0 || img >= carrier_->size())
            throw std::invalid_argument("image index out of range");
        if (carrier_->period(i) % carrier_->period(img) != 0)
            throw std::invalid_argument("image period must divide the source period");
    }
    if (!is_equivariant()) throw std::invalid_argument("map does not commute with rotation");
}

EquivariantMap EquivariantMap::identity(std::shared_ptr<const PeriodicCarrier> carrier) {
    std::vector<int> images(static_cast<std::size_t>(carrier->size()));
    for (int i = 0; i < carrier->size(); ++i) images[static_cast<std::size_t>(i)] = i;
    return EquivariantMap(std::move(carrier), std::move(images));
}

bool EquivariantMap::is_identity() const {
    for (int i = 0; i < carrier_->size(); ++i)
        if (apply(i) != i) return false;
    return true;
}

bool EquivariantMap::is_idempotent() const {
    for (int i = 0; i < carrier_->size(); ++i)
        if (apply(apply(i)) != apply(i)) return false;
    return true;
}

bool EquivariantMap::is_equivariant() const {
    for (int i = 0; i < carrier_->size(); ++i) {
        if (apply(carrier_->rotate(i, 1)) != carrier_->rotate(apply(i), 1)) return false;
    }
    return true;
}

EquivariantMap compose(const EquivariantMap& f, const EquivariantMap& g) {
    if (f.carrier_ptr().get() != g.carrier_ptr().get())
        throw std::invalid_argument("composing maps over different carriers");
    std::vector<int> images(g.images().size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = f.apply(g.images()[i]);
    return EquivariantMap(f.carrier_ptr(), std::move(images));
}

namespace {

/// Equivariant idempotent mover: sends orbit `from` onto orbit `to` by
/// rep(from) -> sigma^offset(rep(to)), fixing every other point.
EquivariantMap orbit_mover(const std::shared_ptr<const PeriodicCarrier>& carrier, int from_orbit,
                           int to_orbit, int offset) {
    const PeriodicCarrier& c = *carrier;
    std::vector<int> images(static_cast<std::size_t>(c.size()));
    for (int i = 0; i < c.size(); ++i) images[static_cast<std::size_t>(i)] = i;
    const int target_rep = c.orbit_rep(to_orbit);
    for (int i : c.orbit(from_orbit))
        images[static_cast<std::size_t>(i)] = c.rotate(target_rep, c.phase_of(i) + offset);
    return EquivariantMap(carrier, std::move(images));
}

/// Mover realizing x -> f(x) on one orbit, identity elsewhere; used for
/// drops to a smaller period where f itself supplies the exact images.
EquivariantMap orbit_drop(const std::shared_ptr<const PeriodicCarrier>& carrier,
                          const EquivariantMap& f, int from_orbit) {
    const PeriodicCarrier& c = *carrier;
    std::vector<int> images(static_cast<std::size_t>(c.size()));
    for (int i = 0; i < c.size(); ++i) images[static_cast<std::size_t>(i)] = i;
    for (int i : c.orbit(from_orbit)) images[static_cast<std::size_t>(i)] = f.apply(i);
    return EquivariantMap(carrier, std::move(images));
}

EquivariantMap compose_firing_order(const std::shared_ptr<const PeriodicCarrier>& carrier,
                                    const std::vector<EquivariantMap>& firing) {
    EquivariantMap acc = EquivariantMap::identity(carrier);
    for (const EquivariantMap& step : firing) acc = compose(step, acc);
    return acc;
}

/// Point-set image of Q_i under f equals Q_i?
bool maps_period_onto_itself(const EquivariantMap& f, int i) {
    const PeriodicCarrier& c = f.carrier();
    std::set<int> sources, images;
    for (int p = 0; p < c.size(); ++p) {
        if (c.period(p) != i) continue;
        sources.insert(p);
        images.insert(f.apply(p));
    }
    return sources == images;
}

}  // namespace

EquivariantFactorization decompose_equivariant(const EquivariantMap& f) {
    const auto carrier = f.carrier_ptr();
    const PeriodicCarrier& c = *carrier;
    const int m = c.max_period();

    // Precondition: Q_i onto itself forces identity there.
    for (int i = 1; i <= m; ++i) {
        if (!maps_period_onto_itself(f, i)) continue;
        for (int p = 0; p < c.size(); ++p) {
            if (c.period(p) == i && f.apply(p) != p)
                throw ConditionViolated(i, c.point(p).period_word());
        }
    }

    EquivariantFactorization fact{f, {}};
    if (f.is_identity()) return fact;

    std::vector<EquivariantMap> firing;  // innermost first, periods ascending

    for (int i = 1; i <= m; ++i) {
        if (maps_period_onto_itself(f, i)) continue;  // identity on Q_i, nothing to do

        // Orbits of period i and where f sends them.
        std::vector<int> period_orbits;
        for (int o = 0; o < c.orbit_count(); ++o)
            if (c.orbit_period(o) == i) period_orbits.push_back(o);
        if (period_orbits.empty()) continue;

        std::map<int, int> image_orbit;   // orbit -> orbit of f(rep)
        std::map<int, int> image_offset;  // orbit -> s with f(rep) = sigma^s(rep(image orbit))
        for (int o : period_orbits) {
            const int img = f.apply(c.orbit_rep(o));
            image_orbit[o] = c.orbit_of(img);
            image_offset[o] = c.phase_of(img);
        }

        std::vector<int> drops, stays;
        for (int o : period_orbits) {
            if (c.orbit_period(image_orbit[o]) < i)
                drops.push_back(o);
            else
                stays.push_back(o);
        }

        std::vector<EquivariantMap> local;  // firing order within period i
        for (int o : drops) local.push_back(orbit_drop(carrier, f, o));

        if (!stays.empty()) {
            // psi: stays -> period-i orbits; gamma picks the least preimage.
            std::set<int> psi_image;
            for (int o : stays) psi_image.insert(image_orbit[o]);
            std::map<int, int> gamma;
            for (int o : stays) {
                const int b = image_orbit[o];
                if (!gamma.contains(b) || o < gamma[b]) gamma[b] = o;
            }
            std::set<int> gamma_image;
            for (const auto& [b, a] : gamma) gamma_image.insert(a);

            // Spare period-i orbit outside the image; exists because f does
            // not map Q_i onto itself.
            int spare = -1;
            for (int o : period_orbits)
                if (!psi_image.contains(o)) {
                    spare = o;
                    break;
                }
            if (spare == -1) throw Error("no spare orbit despite a non-onto period class");

            // Phase II: move gamma(psi(stays)) onto psi(stays), offsets 0.
            std::vector<int> from_only, to_only;
            for (int a : gamma_image)
                if (!psi_image.contains(a)) from_only.push_back(a);
            for (int b : psi_image)
                if (!gamma_image.contains(b)) to_only.push_back(b);
            std::vector<EquivariantMap> phase2;
            std::map<int, int> theta;
            for (int a : gamma_image) theta[a] = a;
            for (std::size_t t = 0; t < from_only.size(); ++t) {
                phase2.push_back(orbit_mover(carrier, from_only[t], to_only[t], 0));
                theta[from_only[t]] = to_only[t];
            }

            // Phase III: residual orbit permutation pi of psi_image with
            // pi(theta(gamma(b))) = b, as spare-orbit transposition triples.
            std::map<int, int> pi;
            for (int b : psi_image) pi[theta.at(gamma.at(b))] = b;
            std::vector<EquivariantMap> phase3;
            std::set<int> done;
            for (int c0 : psi_image) {
                if (done.contains(c0)) continue;
                std::vector<int> cycle{c0};
                done.insert(c0);
                for (int x = pi.at(c0); x != c0; x = pi.at(x)) {
                    cycle.push_back(x);
                    done.insert(x);
                }
                for (std::size_t j = 1; j < cycle.size(); ++j) {
                    phase3.push_back(orbit_mover(carrier, cycle[0], spare, 0));
                    phase3.push_back(orbit_mover(carrier, cycle[j], cycle[0], 0));
                    phase3.push_back(orbit_mover(carrier, spare, cycle[j], 0));
                }
            }

            // Offsets through phases II+III, read off the concrete composite.
            std::vector<EquivariantMap> phases23 = phase2;
            phases23.insert(phases23.end(), phase3.begin(), phase3.end());
            const EquivariantMap c23 = compose_firing_order(carrier, phases23);
            std::map<int, int> through_offset;  // gamma(b) -> arrival phase at b
            for (const auto& [b, a] : gamma) {
                const int y = c23.apply(c.orbit_rep(a));
                if (c.orbit_of(y) != b) throw Error("orbit shuffle landed on the wrong orbit");
                through_offset[a] = c.phase_of(y);
            }

            // Phase IV: rotate each image orbit in place through the spare
            // orbit so the gamma representative arrives exactly at f(rep).
            std::map<int, int> correction;
            std::vector<EquivariantMap> phase4;
            for (int b : psi_image) {
                const int a = gamma.at(b);
                int t = (image_offset.at(a) - through_offset.at(a)) % i;
                if (t < 0) t += i;
                correction[b] = t;
                if (t != 0) {
                    phase4.push_back(orbit_mover(carrier, b, spare, 0));
                    phase4.push_back(orbit_mover(carrier, spare, b, t));
                }
            }

            // Phase I: per-orbit movers with offsets chosen so each stay
            // orbit arrives at its exact image point.
            std::vector<EquivariantMap> phase1;
            for (int o : stays) {
                if (gamma_image.contains(o)) continue;
                const int target = gamma.at(image_orbit.at(o));
                int d = (image_offset.at(o) - through_offset.at(target) -
                         correction.at(image_orbit.at(o))) %
                        i;
                if (d < 0) d += i;
                phase1.push_back(orbit_mover(carrier, o, target, d));
            }

            local.insert(local.end(), phase1.begin(), phase1.end());
            local.insert(local.end(), phase2.begin(), phase2.end());
            local.insert(local.end(), phase3.begin(), phase3.end());
            local.insert(local.end(), phase4.begin(), phase4.end());
        }

        // Sanity: the period-i block must realize f on Q_i and fix the rest.
        const EquivariantMap block = compose_firing_order(carrier, local);
        for (int p = 0; p < c.size(); ++p) {
            const int want = c.period(p) == i ? f.apply(p) : p;
            if (block.apply(p) != want) throw Error("period block did not realize the target map");
        }

        firing.insert(firing.end(), local.begin(), local.end());
    }

    fact.factors.assign(firing.rbegin(), firing.rend());
    const EquivariantMap total = compose_firing_order(carrier, firing);
    if (!(total == f)) throw Error("equivariant factorization did not recompose to its target");
    return fact;
}

bool verify_factorization(const EquivariantFactorization& fact) {
    EquivariantMap acc = EquivariantMap::identity(fact.target.carrier_ptr());
    for (auto it = fact.factors.rbegin(); it != fact.factors.rend(); ++it) {
        if (!it->is_idempotent() || !it->is_equivariant()) return false;
        acc = compose(*it, acc);
    }
    return acc == fact.target;
}

std::vector<EquivariantMap> enumerate_equivariant_maps(
    std::shared_ptr<const PeriodicCarrier> carrier) {
    const PeriodicCarrier& c = *carrier;
    // Per orbit: candidate images of the representative are the points
    // whose period divides the orbit period.
    std::vector<std::vector<int>> choices(static_cast<std::size_t>(c.orbit_count()));
    for (int o = 0; o < c.orbit_count(); ++o) {
        for (int p = 0; p < c.size(); ++p)
            if (c.orbit_period(o) % c.period(p) == 0)
                choices[static_cast<std::size_t>(o)].push_back(p);
    }

    std::vector<EquivariantMap> maps;
    std::vector<std::size_t> pick(static_cast<std::size_t>(c.orbit_count()), 0);
    while (true) {
        std::vector<int> images(static_cast<std::size_t>(c.size()));
        for (int o = 0; o < c.orbit_count(); ++o) {
            const int rep_image = choices[static_cast<std::size_t>(o)][pick[static_cast<std::size_t>(o)]];
            for (int p : c.orbit(o))
                images[static_cast<std::size_t>(p)] = c.rotate(rep_image, c.phase_of(p));
        }
        maps.emplace_back(carrier, std::move(images));

        // Mixed-radix increment over the orbit choices.
        int pos = c.orbit_count() - 1;
        while (pos >= 0) {
            auto& digit = pick[static_cast<std::size_t>(pos)];
            if (digit + 1 < choices[static_cast<std::size_t>(pos)].size()) {
                ++digit;
                break;
            }
            digit = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return maps;
}

OracleReport monoid_closure_oracle(int k, int m, std::uint64_t budget) {
    OracleReport report;
    report.k = k;
    report.m = m;

    auto carrier = std::make_shared<const PeriodicCarrier>(k, m);
    // Rough size gate: product of per-orbit choice counts.
    {
        long double estimate = 1;
        const PeriodicCarrier& c = *carrier;
        for (int o = 0; o < c.orbit_count(); ++o) {
            int count = 0;
            for (int p = 0; p < c.size(); ++p)
                if (c.orbit_period(o) % c.period(p) == 0) ++count;
            estimate *= count;
            if (estimate > static_cast<long double>(budget))
                throw ExhaustiveCheckInfeasible(budget + 1);
        }
    }

    const std::vector<EquivariantMap> all = enumerate_equivariant_maps(carrier);
    report.map_count = all.size();

    std::vector<std::vector<int>> generators;
    for (const EquivariantMap& f : all)
        if (f.is_idempotent()) generators.push_back(f.images());
    report.idempotent_count = generators.size();

    auto compose_images = [&](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> h(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            h[i] = f[static_cast<std::size_t>(g[i])];
        return h;
    };

    // Closure under composition; the identity is the empty product.
    std::vector<int> ident(static_cast<std::size_t>(carrier->size()));
    for (int i = 0; i < carrier->size(); ++i) ident[static_cast<std::size_t>(i)] = i;
    std::set<std::vector<int>> closure{ident};
    std::vector<std::vector<int>> frontier{ident};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                for (const auto& y : {compose_images(g, x), compose_images(x, g)}) {
                    if (closure.insert(y).second) next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    report.closure_size = closure.size();

    // The bounded orbit condition.
    std::set<std::vector<int>> condition;
    for (const EquivariantMap& f : all) {
        bool ok = true;
        for (int i = 1; i <= m && ok; ++i) {
            if (!maps_period_onto_itself(f, i)) continue;
            for (int p = 0; p < carrier->size() && ok; ++p)
                if (carrier->period(p) == i && f.apply(p) != p) ok = false;
        }
        if (ok) condition.insert(f.images());
    }
    report.condition_size = condition.size();

    report.equal = closure == condition;
    if (!report.equal) {
        for (const auto& v : closure)
            if (!condition.contains(v)) report.counterexamples.push_back(v);
        for (const auto& v : condition)
            if (!closure.contains(v)) report.counterexamples.push_back(v);
    }
    return report;
}

}  // namespace idemca
