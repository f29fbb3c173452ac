#include "vsum/kv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vsum/errors.hpp"

namespace vsum::kv {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Document Document::parse(const std::string& text) {
    Document doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("key-value line " + std::to_string(lineno) + " has no '=': " + t);
        std::string key = trim(t.substr(0, eq));
        if (key.empty())
            throw ParseError("key-value line " + std::to_string(lineno) + " has empty key");
        doc.set(key, trim(t.substr(eq + 1)));
    }
    return doc;
}

Document Document::load(const std::string& path) {
    return parse(read_file(path));
}

void Document::set(const std::string& key, const std::string& value) {
    if (values_.find(key) == values_.end()) order_.push_back(key);
    values_[key] = value;
}

bool Document::has(const std::string& key) const {
    return values_.find(key) != values_.end();
}

const std::string& Document::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ParseError("missing key: " + key);
    return it->second;
}

std::string Document::get_or(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

std::string Document::serialize() const {
    std::string out;
    for (const auto& key : order_) {
        out += key;
        out += " = ";
        out += values_.at(key);
        out += '\n';
    }
    return out;
}

void Document::save(const std::string& path) const {
    write_file_atomic(path, serialize());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(ErrorClass::Input, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError(ErrorClass::Input, "read failed: " + path);
    return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError(ErrorClass::Internal, "cannot create " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw IoError(ErrorClass::Internal, "write failed: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError(ErrorClass::Internal, "rename " + tmp + " -> " + path + ": " + ec.message());
}

}  // namespace vsum::kv
