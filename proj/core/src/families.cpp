#include "glsg/families.hpp"

#include <charconv>

namespace glsg {

namespace {

int parse_positive_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw ParseError("family spec: bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  auto parts = split(text, ':');
  const std::string_view head = parts[0];
  FamilySpec spec;
  if (head == "null" || head == "leftzero" || head == "rightzero" || head == "cyclic") {
    if (parts.size() != 2) throw ParseError("family spec: expected '" + std::string(head) + ":N'");
    spec.kind = head == "null"        ? FamilyKind::null_semigroup
                : head == "leftzero"  ? FamilyKind::left_zero
                : head == "rightzero" ? FamilyKind::right_zero
                                      : FamilyKind::cyclic_group;
    spec.a = parse_positive_int(parts[1], "order");
  } else if (head == "band") {
    if (parts.size() != 2) throw ParseError("family spec: expected 'band:PxQ'");
    auto dims = split(parts[1], 'x');
    if (dims.size() != 2) throw ParseError("family spec: expected 'band:PxQ'");
    spec.kind = FamilyKind::rectangular_band;
    spec.a = parse_positive_int(dims[0], "p");
    spec.b = parse_positive_int(dims[1], "q");
  } else if (head == "const") {
    if (parts.size() != 3) throw ParseError("family spec: expected 'const:N:C'");
    spec.kind = FamilyKind::constant_image;
    spec.a = parse_positive_int(parts[1], "order");
    spec.b = parse_positive_int(parts[2], "target");
    if (spec.b > spec.a) {
      throw ParseError("family spec: target " + std::to_string(spec.b) + " out of 1.." +
                       std::to_string(spec.a));
    }
  } else if (head == "brandt") {
    if (parts.size() != 4 || parts[1] != "cyclic") {
      throw ParseError("family spec: expected 'brandt:cyclic:M:N'");
    }
    spec.kind = FamilyKind::brandt;
    spec.a = parse_positive_int(parts[2], "group order");
    spec.b = parse_positive_int(parts[3], "index size");
  } else {
    throw ParseError("family spec: unknown family '" + std::string(head) + "'");
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::null_semigroup:
      return "null:" + std::to_string(spec.a);
    case FamilyKind::left_zero:
      return "leftzero:" + std::to_string(spec.a);
    case FamilyKind::right_zero:
      return "rightzero:" + std::to_string(spec.a);
    case FamilyKind::rectangular_band:
      return "band:" + std::to_string(spec.a) + "x" + std::to_string(spec.b);
    case FamilyKind::cyclic_group:
      return "cyclic:" + std::to_string(spec.a);
    case FamilyKind::constant_image:
      return "const:" + std::to_string(spec.a) + ":" + std::to_string(spec.b);
    case FamilyKind::brandt:
      return "brandt:cyclic:" + std::to_string(spec.a) + ":" + std::to_string(spec.b);
  }
  return "?";
}

CayleyTable make_null(int n) { return make_constant_image(n, n); }

CayleyTable make_left_zero(int n) { return make_rectangular_band(n, 1); }

CayleyTable make_right_zero(int n) { return make_rectangular_band(1, n); }

CayleyTable make_rectangular_band(int p, int q) {
  if (p < 1 || q < 1) throw ParseError("band: sides must be positive");
  const int n = p * q;
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  // element (a,b) -> index (a-1)*q + b; (a,b)(c,d) = (a,d)
  for (int a = 1; a <= p; ++a) {
    for (int b = 1; b <= q; ++b) {
      const int row = (a - 1) * q + b;
      for (int c = 1; c <= p; ++c) {
        for (int d = 1; d <= q; ++d) {
          const int col = (c - 1) * q + d;
          out[(row - 1) * n + (col - 1)] = (a - 1) * q + d;
        }
      }
    }
  }
  return CayleyTable(n, std::move(out));
}

CayleyTable make_cyclic_group(int n) {
  if (n < 1) throw ParseError("cyclic: order must be positive");
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[i * n + j] = (i + j) % n + 1;
    }
  }
  return CayleyTable(n, std::move(out));
}

CayleyTable make_constant_image(int n, int c) {
  if (n < 1) throw ParseError("const: order must be positive");
  if (c < 1 || c > n) throw EntryOutOfRangeError(1, 1, c);
  return CayleyTable(n, std::vector<int>(static_cast<std::size_t>(n) * n, c));
}

CayleyTable make_brandt(const CayleyTable& group, int index_size) {
  if (index_size < 1) throw ParseError("brandt: index size must be positive");
  const int m = group.order();
  if (!is_cancellative(group)) {
    throw GroupInvalidError("table is not a Latin square");
  }
  {
    int wi, wj, wk;
    if (find_associativity_witness(m, group.entries(), wi, wj, wk)) {
      throw GroupInvalidError("table is not associative");
    }
  }
  int identity = 0;
  for (int e = 1; e <= m && identity == 0; ++e) {
    bool ok = true;
    for (int x = 1; x <= m && ok; ++x) {
      ok = group.product(e, x) == x && group.product(x, e) == x;
    }
    if (ok) identity = e;
  }
  if (identity == 0) {
    throw GroupInvalidError("table has no identity");
  }

  const int ni = index_size;
  const int order = 1 + m * ni * ni;
  auto encode = [&](int i, int g, int j) { return 1 + ((i - 1) * m + (g - 1)) * ni + j; };
  std::vector<int> out(static_cast<std::size_t>(order) * order, 1);  // default: zero
  for (int i = 1; i <= ni; ++i) {
    for (int g = 1; g <= m; ++g) {
      for (int j = 1; j <= ni; ++j) {
        const int x = encode(i, g, j);
        // only middle indices k = j produce a nonzero product
        for (int h = 1; h <= m; ++h) {
          for (int l = 1; l <= ni; ++l) {
            const int y = encode(j, h, l);
            out[(x - 1) * order + (y - 1)] = encode(i, group.product(g, h), l);
          }
        }
      }
    }
  }
  return CayleyTable(order, std::move(out));
}

CayleyTable make_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::null_semigroup:
      return make_null(spec.a);
    case FamilyKind::left_zero:
      return make_left_zero(spec.a);
    case FamilyKind::right_zero:
      return make_right_zero(spec.a);
    case FamilyKind::rectangular_band:
      return make_rectangular_band(spec.a, spec.b);
    case FamilyKind::cyclic_group:
      return make_cyclic_group(spec.a);
    case FamilyKind::constant_image:
      return make_constant_image(spec.a, spec.b);
    case FamilyKind::brandt:
      return make_brandt(make_cyclic_group(spec.a), spec.b);
  }
  throw UnsupportedFamilyError("unknown family kind");
}

}  // namespace glsg
