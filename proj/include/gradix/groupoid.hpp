#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gradix {

inline constexpr int kMaxObjects = 64;
inline constexpr int kMaxGroupOrder = 64;

class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup(1, {{0}}) {}
    // Validates closure, neutral element, inverses and associativity.
    FiniteGroup(int order, std::vector<std::vector<int>> mult);

    static FiniteGroup trivial() { return FiniteGroup(); }
    static FiniteGroup cyclic(int n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int g, int h) const { return mult_[g * order_ + h]; }
    int inv(int g) const { return inv_[g]; }
    int element_order(int g) const;
    std::vector<int> element_orders_sorted() const;
    std::vector<std::vector<int>> table() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.order_ == b.order_ && a.mult_ == b.mult_;
    }

private:
    int order_;
    int identity_ = 0;
    std::vector<int> mult_;
    std::vector<int> inv_;
};

struct Morphism {
    int block = 0;
    int target = 0;  // r
    int elem = 0;
    int source = 0;  // d

    friend bool operator==(const Morphism& a, const Morphism& b) {
        return a.block == b.block && a.target == b.target && a.elem == b.elem && a.source == b.source;
    }
    friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }
    friend bool operator<(const Morphism& a, const Morphism& b) {
        if (a.block != b.block) return a.block < b.block;
        if (a.target != b.target) return a.target < b.target;
        if (a.source != b.source) return a.source < b.source;
        return a.elem < b.elem;
    }
};

struct MorphismHash {
    std::size_t operator()(const Morphism& m) const {
        std::size_t h = static_cast<std::size_t>(m.block);
        h = h * 1000003u ^ static_cast<std::size_t>(m.target);
        h = h * 1000003u ^ static_cast<std::size_t>(m.elem);
        h = h * 1000003u ^ static_cast<std::size_t>(m.source);
        return h;
    }
};

struct ConnectedBlock {
    std::vector<int> objects;  // sorted ascending; objects[0] is the base object
    FiniteGroup group;
};

struct BlockSignature {
    int objects;
    int order;
    std::vector<int> element_orders;
    friend bool operator==(const BlockSignature&, const BlockSignature&) = default;
    friend auto operator<=>(const BlockSignature&, const BlockSignature&) = default;
};

struct RawGroupoid {
    std::vector<int> objects;
    std::vector<std::pair<int, int>> morphisms;  // (target, source)
    std::vector<std::array<int, 3>> compose;     // g o h = k, by morphism index
};

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

struct RawConversion;

class FiniteGroupoid {
public:
    explicit FiniteGroupoid(std::vector<ConnectedBlock> blocks);

    static GroupoidPtr make(std::vector<ConnectedBlock> blocks);
    static GroupoidPtr pair_groupoid(int n);
    static GroupoidPtr pair_groupoid_on(std::vector<int> objects);
    static GroupoidPtr group_as_groupoid(const FiniteGroup& g);
    static GroupoidPtr product_groupoid(std::vector<int> objects, const FiniteGroup& g);
    static RawConversion from_composition_table(const RawGroupoid& raw);

    const std::vector<ConnectedBlock>& blocks() const { return blocks_; }
    const ConnectedBlock& block(int b) const { return blocks_.at(b); }
    std::vector<int> objects() const;
    bool has_object(int id) const { return where_.count(id) != 0; }
    int block_of(int obj) const;
    int base_object(int b) const { return blocks_.at(b).objects.front(); }
    const FiniteGroup& group_of(int b) const { return blocks_.at(b).group; }

    Morphism identity(int obj) const;
    Morphism make_morphism(int target, int elem, int source) const;
    bool is_identity(const Morphism& m) const;
    void validate(const Morphism& m) const;
    bool valid(const Morphism& m) const;

    int d(const Morphism& m) const { return m.source; }
    int r(const Morphism& m) const { return m.target; }
    std::optional<Morphism> compose(const Morphism& g, const Morphism& h) const;
    Morphism compose_or_throw(const Morphism& g, const Morphism& h) const;
    Morphism inverse(const Morphism& g) const;

    // sigma_e = (e0, 1, e)
    Morphism section(int obj) const;
    std::vector<Morphism> morphisms() const;
    std::vector<Morphism> hom(int target, int source) const;  // target Gamma source
    std::size_t size() const;

    FiniteGroup isotropy_group(int obj) const;
    bool is_connected() const { return blocks_.size() == 1; }
    std::vector<BlockSignature> signature() const;
    RawGroupoid to_raw() const;

    std::string str(const Morphism& m) const;

private:
    std::vector<ConnectedBlock> blocks_;
    std::unordered_map<int, int> where_;
};

struct RawConversion {
    GroupoidPtr groupoid;
    std::vector<Morphism> relabel;  // raw morphism index -> canonical morphism
};

}  // namespace gradix
