#include "miquel/scene.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

namespace miquel {

namespace {

struct Statement {
    int line = 0;
    std::string key;
    std::string value;
};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& field,
                       const std::string& reason) {
    std::ostringstream os;
    os << "line " << line << ", " << field << ", " << reason;
    throw Error(Errc::parse_error, os.str());
}

double parse_real(const std::string& token, int line, const std::string& field) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        fail(line, field, "expected real number");
    }
    return value;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

Point parse_point(const std::string& value, int line, const std::string& field) {
    std::vector<std::string> toks = split_ws(value);
    if (toks.size() != 2) fail(line, field, "expected two reals");
    return {parse_real(toks[0], line, field), parse_real(toks[1], line, field)};
}

double parse_single(const std::string& value, int line, const std::string& field) {
    std::vector<std::string> toks = split_ws(value);
    if (toks.size() != 1) fail(line, field, "expected one real");
    return parse_real(toks[0], line, field);
}

std::vector<Statement> tokenize(const std::string& text) {
    std::vector<Statement> out;
    int line_no = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t start = 0;
        while (start <= line.size()) {
            size_t semi = line.find(';', start);
            std::string piece = line.substr(
                start, semi == std::string::npos ? std::string::npos
                                                 : semi - start);
            piece = trim(piece);
            if (!piece.empty()) {
                size_t eq = piece.find('=');
                if (eq == std::string::npos) {
                    fail(line_no, piece, "missing '='");
                }
                Statement st;
                st.line = line_no;
                st.key = trim(piece.substr(0, eq));
                st.value = trim(piece.substr(eq + 1));
                if (st.key.empty()) fail(line_no, "(empty)", "missing key");
                out.push_back(st);
            }
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
    }
    return out;
}

}  // namespace

Scene parse_scene(const std::string& text) {
    std::optional<Point> va, vb, vc;
    std::optional<VertexLabel> vertex;
    std::optional<CevianPair> cevians;
    std::optional<Point> point;
    std::optional<double> line_angle;
    std::optional<CenterKind> center;
    std::optional<double> tol_abs, tol_rel;
    std::optional<std::uint64_t> seed;

    for (const Statement& st : tokenize(text)) {
        auto dup = [&](bool already) {
            if (already) fail(st.line, st.key, "duplicate key");
        };
        if (st.key == "triangle.a") {
            dup(va.has_value());
            va = parse_point(st.value, st.line, st.key);
        } else if (st.key == "triangle.b") {
            dup(vb.has_value());
            vb = parse_point(st.value, st.line, st.key);
        } else if (st.key == "triangle.c") {
            dup(vc.has_value());
            vc = parse_point(st.value, st.line, st.key);
        } else if (st.key == "vertex") {
            dup(vertex.has_value());
            if (st.value == "A") vertex = VertexLabel::a;
            else if (st.value == "B") vertex = VertexLabel::b;
            else if (st.value == "C") vertex = VertexLabel::c;
            else fail(st.line, st.key, "expected A, B or C");
        } else if (st.key == "cevians") {
            dup(cevians.has_value());
            Point pair = parse_point(st.value, st.line, st.key);
            cevians = CevianPair{pair.x, pair.y};
        } else if (st.key == "point") {
            dup(point.has_value());
            point = parse_point(st.value, st.line, st.key);
        } else if (st.key == "line_angle") {
            dup(line_angle.has_value());
            line_angle = parse_single(st.value, st.line, st.key);
        } else if (st.key == "center") {
            dup(center.has_value());
            if (st.value == "incenter") center = CenterKind::incenter;
            else if (st.value == "orthocenter") center = CenterKind::orthocenter;
            else if (st.value == "circumcenter") center = CenterKind::circumcenter;
            else fail(st.line, st.key, "expected incenter, orthocenter or circumcenter");
        } else if (st.key == "seed") {
            dup(seed.has_value());
            std::uint64_t v = 0;
            const char* first = st.value.data();
            const char* last = st.value.data() + st.value.size();
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last) {
                fail(st.line, st.key, "expected unsigned integer");
            }
            seed = v;
        } else if (st.key == "tolerance.absolute") {
            dup(tol_abs.has_value());
            tol_abs = parse_single(st.value, st.line, st.key);
        } else if (st.key == "tolerance.relative") {
            dup(tol_rel.has_value());
            tol_rel = parse_single(st.value, st.line, st.key);
        } else {
            fail(st.line, st.key, "unknown key");
        }
    }

    if (!va || !vb || !vc) fail(0, "triangle", "all three vertices required");
    int payloads = int(cevians.has_value()) + int(point.has_value()) +
                   int(line_angle.has_value()) + int(center.has_value());
    if (payloads != 1) {
        fail(0, "payload",
             "exactly one of cevians/point/line_angle/center required");
    }

    Tolerance tol;
    if (tol_abs) tol.absolute_eps = *tol_abs;
    if (tol_rel) tol.relative_eps = *tol_rel;

    try {
        Scene scene(Triangle(*va, *vb, *vc, tol));
        scene.vertex = vertex.value_or(VertexLabel::a);
        scene.cevians = cevians;
        scene.point = point;
        scene.line_angle = line_angle;
        scene.center = center;
        scene.tolerance = tol;
        scene.seed = seed.value_or(0);
        return scene;
    } catch (const Error& err) {
        if (err.code() != Errc::degenerate_triangle) throw;
        fail(0, "triangle", "degenerate triangle");
    }
}

std::string real_text(double value, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, value);
    std::string s = buf;
    if (s == "-0") s = "0";
    return s;
}

namespace {

std::string scene_body(const Scene& scene, const char* sep) {
    auto pt = [](Point p) {
        return real_text(p.x, 17) + " " + real_text(p.y, 17);
    };
    std::ostringstream os;
    os << "triangle.a = " << pt(scene.triangle.a) << sep;
    os << "triangle.b = " << pt(scene.triangle.b) << sep;
    os << "triangle.c = " << pt(scene.triangle.c) << sep;
    os << "vertex = " << vertex_name(scene.vertex) << sep;
    if (scene.cevians) {
        os << "cevians = " << real_text(scene.cevians->t_b, 17) << " "
           << real_text(scene.cevians->t_c, 17) << sep;
    }
    if (scene.point) os << "point = " << pt(*scene.point) << sep;
    if (scene.line_angle) {
        os << "line_angle = " << real_text(*scene.line_angle, 17) << sep;
    }
    if (scene.center) os << "center = " << center_kind_name(*scene.center) << sep;
    if (scene.seed != 0) os << "seed = " << scene.seed << sep;
    Tolerance def;
    if (scene.tolerance.absolute_eps != def.absolute_eps) {
        os << "tolerance.absolute = " << real_text(scene.tolerance.absolute_eps, 17)
           << sep;
    }
    if (scene.tolerance.relative_eps != def.relative_eps) {
        os << "tolerance.relative = " << real_text(scene.tolerance.relative_eps, 17)
           << sep;
    }
    return os.str();
}

}  // namespace

std::string serialize_scene(const Scene& scene) {
    return scene_body(scene, "\n");
}

std::string serialize_scene_line(const Scene& scene) {
    std::string body = scene_body(scene, "; ");
    // Drop the trailing separator.
    if (body.size() >= 2) body.erase(body.size() - 2);
    return body;
}

}  // namespace miquel
