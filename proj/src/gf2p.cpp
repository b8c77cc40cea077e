#include <vdw/gf2p.hpp>
#include <vdw/error.hpp>

#include <stdexcept>

namespace vdw::gf2p
{
    auto F2Poly::to_string() const -> std::string
    {
        if (_bits == 0)
            return "0";
        std::string s;
        for (int i = degree() ; i >= 0 ; --i) {
            if (! coefficient(i))
                continue;
            if (! s.empty())
                s += "+";
            if (i == 0)
                s += "1";
            else if (i == 1)
                s += "x";
            else
                s += "x^" + std::to_string(i);
        }
        return s;
    }

    auto operator*(F2Poly x, F2Poly y) -> F2Poly
    {
        if (x.is_zero() || y.is_zero())
            return F2Poly{};
        if (x.degree() + y.degree() > 63)
            throw std::overflow_error("F2 polynomial product exceeds degree 63");
        std::uint64_t r = 0, a = x._bits, b = y._bits;
        for (int i = 0 ; b ; ++i, b >>= 1)
            if (b & 1)
                r ^= a << i;
        return F2Poly{r};
    }

    auto operator%(F2Poly x, F2Poly m) -> F2Poly
    {
        if (m.is_zero())
            throw std::domain_error("F2 polynomial reduction by zero");
        const int dm = m.degree();
        std::uint64_t r = x._bits;
        for (int d = F2Poly{r}.degree() ; d >= dm ; d = F2Poly{r}.degree())
            r ^= m._bits << (d - dm);
        return F2Poly{r};
    }

    auto is_irreducible(F2Poly f) -> bool
    {
        const int deg = f.degree();
        if (deg < 1)
            return false;
        for (int d = 1 ; d <= deg / 2 ; ++d)
            for (std::uint64_t g = std::uint64_t{1} << d ; g < (std::uint64_t{1} << (d + 1)) ; ++g)
                if ((f % F2Poly{g}).is_zero())
                    return false;
        return true;
    }

    auto find_irreducible(int p) -> F2Poly
    {
        if (p < 1 || p > max_degree)
            throw std::invalid_argument("irreducible search supports degrees 1..20");
        for (std::uint64_t f = std::uint64_t{1} << p ; f < (std::uint64_t{1} << (p + 1)) ; ++f)
            if (is_irreducible(F2Poly{f}))
                return F2Poly{f};
        throw std::logic_error("no irreducible polynomial found");
    }

    Field::Field(int p, F2Poly modulus) :
        _p(p),
        _modulus(modulus)
    {
        if (p < 1 || p > max_degree)
            throw std::invalid_argument("field degree must be in 1..20");
        if (modulus.degree() != p || ! is_irreducible(modulus))
            throw std::invalid_argument("modulus must be irreducible of degree p");
    }

    auto Field::x() const -> FieldElement
    {
        return {static_cast<std::uint32_t>((F2Poly{2} % _modulus).bits())};
    }

    auto Field::mul(FieldElement a, FieldElement b) const -> FieldElement
    {
        // shift-and-add with reduction folded in; degrees stay below p
        const std::uint64_t top = std::uint64_t{1} << _p;
        std::uint64_t r = 0, x = a.bits, y = b.bits;
        while (y) {
            if (y & 1)
                r ^= x;
            y >>= 1;
            x <<= 1;
            if (x & top)
                x ^= _modulus.bits();
        }
        return {static_cast<std::uint32_t>(r)};
    }

    auto Field::pow(FieldElement a, std::uint64_t e) const -> FieldElement
    {
        FieldElement result = one();
        while (e) {
            if (e & 1)
                result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    auto Field::inverse(FieldElement a) const -> FieldElement
    {
        if (a.bits == 0)
            throw std::domain_error("zero has no inverse");
        return pow(a, order() - 2);
    }

    auto Field::multiplicative_order(FieldElement a) const -> std::uint64_t
    {
        if (a.bits == 0)
            throw std::domain_error("zero has no multiplicative order");
        std::uint64_t ord = order() - 1;
        for (auto q : prime_factors(order() - 1))
            while (ord % q == 0 && pow(a, ord / q) == one())
                ord /= q;
        return ord;
    }

    auto Field::evaluate(F2Poly poly, FieldElement beta) const -> FieldElement
    {
        FieldElement acc = zero();
        for (int i = poly.degree() ; i >= 0 ; --i) {
            acc = mul(acc, beta);
            if (poly.coefficient(i))
                acc = add(acc, one());
        }
        return acc;
    }

    auto prime_factors(std::uint64_t m) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> factors;
        for (std::uint64_t q = 2 ; q * q <= m ; ++q)
            if (m % q == 0) {
                factors.push_back(q);
                while (m % q == 0)
                    m /= q;
            }
        if (m > 1)
            factors.push_back(m);
        return factors;
    }

    auto find_generator(const Field & field) -> FieldElement
    {
        const std::uint64_t group = field.order() - 1;
        const auto factors = prime_factors(group);
        for (std::uint32_t v = 1 ; v < field.order() ; ++v) {
            FieldElement candidate{v};
            bool full = true;
            for (auto q : factors)
                if (field.pow(candidate, group / q) == field.one()) {
                    full = false;
                    break;
                }
            if (full)
                return candidate;
        }
        throw std::logic_error("multiplicative group has no generator");
    }

    auto make_primitive_field(int p) -> PrimitiveField
    {
        Field field{p, find_irreducible(p)};
        auto g = find_generator(field);
        return PrimitiveField{field, g};
    }

    auto is_prime(std::int64_t m) -> bool
    {
        if (m < 2)
            return false;
        for (std::int64_t q = 2 ; q * q <= m ; ++q)
            if (m % q == 0)
                return false;
        return true;
    }

    auto largest_prime_at_most(std::int64_t m) -> std::int64_t
    {
        if (m < 2)
            throw std::invalid_argument("no prime at most m for m < 2");
        std::vector<bool> composite(static_cast<std::size_t>(m + 1), false);
        for (std::int64_t q = 2 ; q * q <= m ; ++q)
            if (! composite[static_cast<std::size_t>(q)])
                for (std::int64_t r = q * q ; r <= m ; r += q)
                    composite[static_cast<std::size_t>(r)] = true;
        for (std::int64_t q = m ; ; --q)
            if (! composite[static_cast<std::size_t>(q)])
                return q;
    }

    auto berlekamp_coloring(int p) -> Coloring
    {
        if (p < 2 || p > max_berlekamp_prime)
            throw std::invalid_argument("berlekamp_coloring supports 2 <= p <= 16");
        if (! is_prime(p))
            throw Error(ErrorCode::not_prime, "berlekamp_coloring requires prime p, got " + std::to_string(p));

        auto [field, g] = make_primitive_field(p);

        // g^j repeats with period 2^p - 1, so one period of constant terms suffices
        const std::uint64_t period = field.order() - 1;
        std::vector<std::uint8_t> cycle(period);
        FieldElement power = g;
        for (std::uint64_t j = 1 ; j <= period ; ++j) {
            cycle[j - 1] = power.constant_term();
            power = field.mul(power, g);
        }

        const auto n = static_cast<std::size_t>(p) * period;
        std::vector<std::uint8_t> bits(n);
        for (std::size_t j = 0 ; j < n ; ++j)
            bits[j] = cycle[j % period];

        Coloring coloring{std::move(bits)};
        if (! verify_proper(coloring, p + 1).proper)
            throw std::logic_error("algebraic coloring failed verification");
        return coloring;
    }

    auto corollary_prime(int k) -> int
    {
        if (k < 4)
            throw std::invalid_argument("corollary_coloring requires k >= 4");
        auto p = static_cast<int>(largest_prime_at_most(k - 1));
        if (p > max_berlekamp_prime)
            throw std::invalid_argument("corollary_coloring supports k <= 17 (prime p <= 16)");
        return p;
    }

    auto corollary_coloring(int k) -> Coloring
    {
        return berlekamp_coloring(corollary_prime(k));
    }
}
