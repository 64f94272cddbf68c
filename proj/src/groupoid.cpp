#include "gradix/groupoid.hpp"

#include "gradix/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gradix {

FiniteGroup::FiniteGroup(int order, std::vector<std::vector<int>> mult) : order_(order)
{
    if (order < 1) throw ValidationError("group order must be positive");
    if (order > kMaxGroupOrder)
        throw ValidationError("group order " + std::to_string(order) + " exceeds limit " + std::to_string(kMaxGroupOrder));
    if (static_cast<int>(mult.size()) != order) throw ValidationError("multiplication table has wrong number of rows");
    mult_.resize(static_cast<std::size_t>(order) * order);
    for (int g = 0; g < order; ++g) {
        if (static_cast<int>(mult[g].size()) != order) throw ValidationError("multiplication table row " + std::to_string(g) + " has wrong length");
        for (int h = 0; h < order; ++h) {
            int k = mult[g][h];
            if (k < 0 || k >= order) throw ValidationError("group closure: product " + std::to_string(g) + "*" + std::to_string(h) + " out of range");
            mult_[g * order + h] = k;
        }
    }
    identity_ = -1;
    for (int e = 0; e < order && identity_ < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < order && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw ValidationError("group identity: no two-sided neutral element");
    inv_.assign(order, -1);
    for (int g = 0; g < order; ++g) {
        for (int h = 0; h < order; ++h)
            if (mul(g, h) == identity_ && mul(h, g) == identity_) {
                inv_[g] = h;
                break;
            }
        if (inv_[g] < 0) throw ValidationError("group inverse: element " + std::to_string(g) + " has no inverse");
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ValidationError("group associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")");
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    if (n < 1) throw ArgumentError("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(n, t);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    int n = a.order() * b.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
    return FiniteGroup(n, t);
}

int FiniteGroup::element_order(int g) const
{
    int k = 1;
    for (int x = g; x != identity_; x = mul(x, g)) ++k;
    return k;
}

std::vector<int> FiniteGroup::element_orders_sorted() const
{
    std::vector<int> v;
    for (int g = 0; g < order_; ++g) v.push_back(element_order(g));
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::vector<int>> FiniteGroup::table() const
{
    std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
    for (int g = 0; g < order_; ++g)
        for (int h = 0; h < order_; ++h) t[g][h] = mul(g, h);
    return t;
}

FiniteGroupoid::FiniteGroupoid(std::vector<ConnectedBlock> blocks)
{
    int total = 0;
    for (auto& b : blocks) {
        if (b.objects.empty()) throw ValidationError("groupoid block has no objects");
        std::sort(b.objects.begin(), b.objects.end());
        total += static_cast<int>(b.objects.size());
    }
    if (total > kMaxObjects) throw ValidationError("groupoid has " + std::to_string(total) + " objects, limit " + std::to_string(kMaxObjects));
    std::sort(blocks.begin(), blocks.end(), [](const ConnectedBlock& a, const ConnectedBlock& b) { return a.objects[0] < b.objects[0]; });
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int o : blocks[i].objects) {
            if (o < 0) throw ValidationError("object id " + std::to_string(o) + " is negative");
            if (!where_.emplace(o, static_cast<int>(i)).second) throw ValidationError("object id " + std::to_string(o) + " appears more than once");
        }
    blocks_ = std::move(blocks);
}

GroupoidPtr FiniteGroupoid::make(std::vector<ConnectedBlock> blocks)
{
    return std::make_shared<const FiniteGroupoid>(std::move(blocks));
}

GroupoidPtr FiniteGroupoid::pair_groupoid(int n)
{
    if (n < 1) throw ArgumentError("pair groupoid needs n >= 1");
    std::vector<int> objs(n);
    std::iota(objs.begin(), objs.end(), 1);
    return pair_groupoid_on(objs);
}

GroupoidPtr FiniteGroupoid::pair_groupoid_on(std::vector<int> objects)
{
    return product_groupoid(std::move(objects), FiniteGroup::trivial());
}

GroupoidPtr FiniteGroupoid::group_as_groupoid(const FiniteGroup& g)
{
    return product_groupoid({0}, g);
}

GroupoidPtr FiniteGroupoid::product_groupoid(std::vector<int> objects, const FiniteGroup& g)
{
    if (objects.empty()) throw ArgumentError("product groupoid needs at least one object");
    return make({ConnectedBlock{std::move(objects), g}});
}

std::vector<int> FiniteGroupoid::objects() const
{
    std::vector<int> v;
    for (auto& b : blocks_) v.insert(v.end(), b.objects.begin(), b.objects.end());
    std::sort(v.begin(), v.end());
    return v;
}

int FiniteGroupoid::block_of(int obj) const
{
    auto it = where_.find(obj);
    if (it == where_.end()) throw ArgumentError("unknown object " + std::to_string(obj));
    return it->second;
}

Morphism FiniteGroupoid::identity(int obj) const
{
    int b = block_of(obj);
    return Morphism{b, obj, blocks_[b].group.identity(), obj};
}

Morphism FiniteGroupoid::make_morphism(int target, int elem, int source) const
{
    int b = block_of(target);
    if (block_of(source) != b)
        throw ArgumentError("objects " + std::to_string(target) + " and " + std::to_string(source) + " lie in different components");
    if (elem < 0 || elem >= blocks_[b].group.order()) throw ArgumentError("group element " + std::to_string(elem) + " out of range");
    return Morphism{b, target, elem, source};
}

bool FiniteGroupoid::is_identity(const Morphism& m) const
{
    return m.target == m.source && m.elem == blocks_.at(m.block).group.identity();
}

bool FiniteGroupoid::valid(const Morphism& m) const
{
    auto t = where_.find(m.target), s = where_.find(m.source);
    if (t == where_.end() || s == where_.end()) return false;
    if (t->second != m.block || s->second != m.block) return false;
    return m.elem >= 0 && m.elem < blocks_[m.block].group.order();
}

void FiniteGroupoid::validate(const Morphism& m) const
{
    if (!valid(m)) throw ValidationError("morphism " + str(m) + " does not belong to the groupoid");
}

std::optional<Morphism> FiniteGroupoid::compose(const Morphism& g, const Morphism& h) const
{
    validate(g);
    validate(h);
    if (g.source != h.target) return std::nullopt;
    return Morphism{g.block, g.target, blocks_[g.block].group.mul(g.elem, h.elem), h.source};
}

Morphism FiniteGroupoid::compose_or_throw(const Morphism& g, const Morphism& h) const
{
    auto c = compose(g, h);
    if (!c) throw ArgumentError("composition " + str(g) + " o " + str(h) + " is not defined");
    return *c;
}

Morphism FiniteGroupoid::inverse(const Morphism& g) const
{
    return Morphism{g.block, g.source, blocks_.at(g.block).group.inv(g.elem), g.target};
}

Morphism FiniteGroupoid::section(int obj) const
{
    int b = block_of(obj);
    return Morphism{b, base_object(b), blocks_[b].group.identity(), obj};
}

std::vector<Morphism> FiniteGroupoid::morphisms() const
{
    std::vector<Morphism> v;
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int y : blocks_[b].objects)
            for (int x : blocks_[b].objects)
                for (int g = 0; g < blocks_[b].group.order(); ++g) v.push_back(Morphism{static_cast<int>(b), y, g, x});
    return v;
}

std::vector<Morphism> FiniteGroupoid::hom(int target, int source) const
{
    int b = block_of(target);
    std::vector<Morphism> v;
    if (block_of(source) != b) return v;
    for (int g = 0; g < blocks_[b].group.order(); ++g) v.push_back(Morphism{b, target, g, source});
    return v;
}

std::size_t FiniteGroupoid::size() const
{
    std::size_t n = 0;
    for (auto& b : blocks_) n += b.objects.size() * b.objects.size() * static_cast<std::size_t>(b.group.order());
    return n;
}

FiniteGroup FiniteGroupoid::isotropy_group(int obj) const
{
    return blocks_[block_of(obj)].group;
}

std::vector<BlockSignature> FiniteGroupoid::signature() const
{
    std::vector<BlockSignature> v;
    for (auto& b : blocks_)
        v.push_back(BlockSignature{static_cast<int>(b.objects.size()), b.group.order(), b.group.element_orders_sorted()});
    std::sort(v.begin(), v.end());
    return v;
}

RawGroupoid FiniteGroupoid::to_raw() const
{
    RawGroupoid raw;
    raw.objects = objects();
    auto ms = morphisms();
    std::map<Morphism, int> index;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        raw.morphisms.emplace_back(ms[i].target, ms[i].source);
        index[ms[i]] = static_cast<int>(i);
    }
    for (auto& g : ms)
        for (auto& h : ms)
            if (g.block == h.block && g.source == h.target)
                raw.compose.push_back({index[g], index[h], index[*compose(g, h)]});
    return raw;
}

std::string FiniteGroupoid::str(const Morphism& m) const
{
    return "(" + std::to_string(m.target) + "," + std::to_string(m.elem) + "," + std::to_string(m.source) + ")";
}

RawConversion FiniteGroupoid::from_composition_table(const RawGroupoid& raw)
{
    const int n = static_cast<int>(raw.morphisms.size());
    std::set<int> objset;
    for (int o : raw.objects) {
        if (o < 0) throw ValidationError("object id " + std::to_string(o) + " is negative");
        if (!objset.insert(o).second) throw ValidationError("object id " + std::to_string(o) + " listed twice");
    }
    if (static_cast<int>(objset.size()) > kMaxObjects) throw ValidationError("too many objects");
    if (n > kMaxObjects * kMaxObjects * 4) throw ValidationError("raw groupoid has too many morphisms");
    auto mname = [](int i) { return "m" + std::to_string(i); };
    for (int i = 0; i < n; ++i) {
        auto [t, s] = raw.morphisms[i];
        if (!objset.count(t) || !objset.count(s)) throw ValidationError("morphism " + mname(i) + " references an unknown object");
    }
    auto tgt = [&](int i) { return raw.morphisms[i].first; };
    auto src = [&](int i) { return raw.morphisms[i].second; };

    std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
    auto at = [&](int g, int h) -> int& { return table[static_cast<std::size_t>(g) * n + h]; };
    for (auto& c : raw.compose) {
        int g = c[0], h = c[1], k = c[2];
        if (g < 0 || g >= n || h < 0 || h >= n || k < 0 || k >= n) throw ValidationError("composition entry references an unknown morphism");
        if (src(g) != tgt(h))
            throw ValidationError("composability: " + mname(g) + " o " + mname(h) + " is given although d(" + mname(g) + ") != r(" + mname(h) + ")");
        if (tgt(k) != tgt(g) || src(k) != src(h))
            throw ValidationError("composability: " + mname(g) + " o " + mname(h) + " = " + mname(k) + " has wrong source or target");
        if (at(g, h) >= 0 && at(g, h) != k) throw ValidationError("composition " + mname(g) + " o " + mname(h) + " given twice with different results");
        at(g, h) = k;
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (src(g) == tgt(h) && at(g, h) < 0)
                throw ValidationError("composability: " + mname(g) + " o " + mname(h) + " is missing although d = r");

    std::map<int, int> ident;
    for (int o : objset) {
        int found = -1;
        for (int i = 0; i < n && found < 0; ++i) {
            if (tgt(i) != o || src(i) != o) continue;
            bool ok = true;
            for (int m = 0; m < n && ok; ++m) {
                if (tgt(m) == o && at(i, m) != m) ok = false;
                if (src(m) == o && at(m, i) != m) ok = false;
            }
            if (ok) found = i;
        }
        if (found < 0) throw ValidationError("identity: object " + std::to_string(o) + " has no identity morphism");
        ident[o] = found;
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (src(a) != tgt(b)) continue;
            int ab = at(a, b);
            for (int c = 0; c < n; ++c) {
                if (src(b) != tgt(c)) continue;
                if (at(ab, c) != at(a, at(b, c)))
                    throw ValidationError("associativity fails at triple (" + mname(a) + "," + mname(b) + "," + mname(c) + ")");
            }
        }

    std::vector<int> inv(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (tgt(h) == src(g) && src(h) == tgt(g) && at(g, h) == ident[tgt(g)] && at(h, g) == ident[src(g)]) {
                inv[g] = h;
                break;
            }
        if (inv[g] < 0) throw ValidationError("inverse: non-invertible morphism " + mname(g));
    }

    // Connected components on objects.
    std::map<int, int> parent;
    for (int o : objset) parent[o] = o;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < n; ++i) {
        int a = find(tgt(i)), b = find(src(i));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::vector<int>> comps;
    for (int o : objset) comps[find(o)].push_back(o);

    std::vector<ConnectedBlock> blocks;
    std::vector<Morphism> relabel(n);
    int bidx = 0;
    for (auto& [root, objs] : comps) {
        int e0 = objs.front();
        std::vector<int> elems;
        std::map<int, int> elem_index;
        for (int i = 0; i < n; ++i)
            if (tgt(i) == e0 && src(i) == e0) {
                elem_index[i] = static_cast<int>(elems.size());
                elems.push_back(i);
            }
        int order = static_cast<int>(elems.size());
        if (order > kMaxGroupOrder) throw ValidationError("isotropy group order exceeds limit");
        std::vector<std::vector<int>> mult(order, std::vector<int>(order));
        for (int x = 0; x < order; ++x)
            for (int y = 0; y < order; ++y) mult[x][y] = elem_index.at(at(elems[x], elems[y]));
        FiniteGroup group(order, mult);

        std::map<int, int> sigma;
        for (int e : objs) {
            if (e == e0) {
                sigma[e] = ident[e0];
                continue;
            }
            for (int i = 0; i < n; ++i)
                if (tgt(i) == e0 && src(i) == e) {
                    sigma[e] = i;
                    break;
                }
        }
        for (int i = 0; i < n; ++i) {
            if (find(tgt(i)) != root) continue;
            int y = tgt(i), x = src(i);
            int g = at(at(sigma[y], i), inv[sigma[x]]);
            relabel[i] = Morphism{bidx, y, elem_index.at(g), x};
        }
        blocks.push_back(ConnectedBlock{objs, group});
        ++bidx;
    }
    return RawConversion{make(std::move(blocks)), std::move(relabel)};
}

}  // namespace gradix
