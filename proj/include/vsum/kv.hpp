#pragma once

#include <map>
#include <string>
#include <vector>

namespace vsum::kv {

// Flat key-value document: one `key = value` per line, `#` comments,
// blank lines ignored. Keys keep insertion order on write so the files
// stay diff-friendly. Used for config files, the weight state file and
// the offline recognizer fixture map.
class Document {
public:
    Document() = default;

    static Document parse(const std::string& text);
    static Document load(const std::string& path);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;

    const std::vector<std::string>& keys() const { return order_; }

    std::string serialize() const;
    void save(const std::string& path) const;  // atomic: write temp, rename

private:
    std::map<std::string, std::string> values_;
    std::vector<std::string> order_;
};

// Atomic whole-file helpers shared by every module that writes outputs.
std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace vsum::kv
