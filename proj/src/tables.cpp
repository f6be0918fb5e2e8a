#include "limdist/tables.hpp"

#include "limdist/chazy.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace limdist {

std::vector<Int> involution_numbers(int n_max) {
    if (n_max < 0) throw std::invalid_argument("involution_numbers: n_max must be >= 0");
    std::vector<Int> I(n_max + 1);
    I[0] = 1;
    if (n_max >= 1) I[1] = 1;
    for (int n = 0; n + 2 <= n_max; ++n) I[n + 2] = I[n + 1] + (n + 1) * I[n];
    return I;
}

Int ExactTable::row_total(int n) const {
    Int s(0);
    for (int l = 1; l <= n; ++l) s += count(n, l);
    return s;
}

Int ExactTable::case_total(int n) const {
    return tag == Case::Inv ? involution_numbers(n)[n] : double_factorial_odd(n);
}

Int TableSummary::case_total(int n) const {
    return tag == Case::Inv ? involution_numbers(n)[n] : double_factorial_odd(n);
}

ExactTable length_counts_table(Case c, int n_max) {
    if (n_max < 1) throw std::invalid_argument("length_counts_table: n_max must be >= 1");
    ExactTable t;
    t.tag = c;
    t.n_max = n_max;
    t.counts.resize(n_max);
    for (int n = 1; n <= n_max; ++n) t.counts[n - 1].assign(n, Int(0));

    std::vector<Int> prev(n_max + 1, Int(0));
    prev[0] = 1;  // cumulative counts at l = 0: only n = 0 contributes
    for (int l = 1; l <= n_max; ++l) {
        std::vector<Int> cur = cumulative_counts_column(c, l, n_max);
        for (int n = std::max(1, l); n <= n_max; ++n) {
            Int cnt = cur[n] - prev[n];
            if (sgn(cnt) < 0)
                throw std::logic_error("length_counts_table: negative count (recursion bug)");
            if (l <= n) t.counts[n - 1][l - 1] = cnt;
            else if (sgn(cnt) != 0)
                throw std::logic_error("length_counts_table: nonzero count above l = n");
        }
        prev = std::move(cur);
    }
    for (int n = 1; n <= n_max; ++n)
        if (t.row_total(n) != t.case_total(n))
            throw std::logic_error("length_counts_table: row-sum conservation violated");
    return t;
}

std::string fnv1a_hex(const std::string& bytes) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

namespace {

std::string table_csv_body(const ExactTable& t) {
    std::ostringstream os;
    os << "case,n,l,count\n";
    for (int n = 1; n <= t.n_max; ++n)
        for (int l = 1; l <= n; ++l)
            os << case_name(t.tag) << ',' << n << ',' << l << ',' << t.count(n, l).get_str() << '\n';
    return os.str();
}

}  // namespace

void save_table(const ExactTable& t, const std::string& path) {
    std::string body = table_csv_body(t);
    {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("save_table: cannot open " + path);
        f << body;
    }
    std::ofstream j(path + ".json", std::ios::binary);
    if (!j) throw std::runtime_error("save_table: cannot open sidecar for " + path);
    j << "{\"case\": \"" << case_name(t.tag) << "\", \"n_max\": " << t.n_max
      << ", \"checksum\": \"" << fnv1a_hex(body) << "\"}\n";
}

ExactTable load_table(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_table: cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    std::string body = buf.str();

    std::istringstream is(body);
    std::string line;
    if (!std::getline(is, line) || line != "case,n,l,count")
        throw std::runtime_error("load_table: bad header in " + path);

    ExactTable t;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag, ns, lstr, cnt;
        if (!std::getline(ls, tag, ',') || !std::getline(ls, ns, ',') ||
            !std::getline(ls, lstr, ',') || !std::getline(ls, cnt))
            throw std::runtime_error("load_table: malformed row in " + path);
        if (first) {
            t.tag = case_from_name(tag);
            first = false;
        }
        int n = std::stoi(ns), l = std::stoi(lstr);
        if (n > t.n_max) {
            t.n_max = n;
            t.counts.resize(n);
        }
        if (static_cast<int>(t.counts[n - 1].size()) < n) t.counts[n - 1].resize(n, Int(0));
        t.counts[n - 1][l - 1] = Int(cnt);
    }

    // verify the sidecar checksum against a canonical re-serialization
    std::ifstream j(path + ".json", std::ios::binary);
    if (j) {
        std::stringstream jb;
        jb << j.rdbuf();
        std::string side = jb.str();
        std::string want = "\"checksum\": \"" + fnv1a_hex(table_csv_body(t)) + "\"";
        if (side.find(want) == std::string::npos)
            throw std::runtime_error("load_table: checksum mismatch for " + path);
    }
    return t;
}

// ---- summary artifact ----

namespace {

void write_summary_stream(std::ostream& os, const TableSummary& s, int next_l,
                          const std::vector<Int>* prev) {
    os << "case " << case_name(s.tag) << "\n";
    os << "n_max " << s.n_max << "\n";
    os << "next_l " << next_l << "\n";
    os << "spots";
    for (auto& [n, _] : s.rows) os << ' ' << n;
    os << "\n";
    for (int n = 1; n <= s.n_max; ++n)
        os << "agg " << n << ' ' << s.row_sum[n - 1].get_str() << ' '
           << s.row_sum_l[n - 1].get_str() << ' ' << s.row_sum_l2[n - 1].get_str() << "\n";
    for (auto& [n, row] : s.rows) {
        for (int l = 1; l <= static_cast<int>(row.size()); ++l)
            os << "row " << n << ' ' << l << ' ' << row[l - 1].get_str() << "\n";
    }
    if (prev) {
        for (int n = 0; n <= s.n_max; ++n) os << "prev " << n << ' ' << (*prev)[n].get_str() << "\n";
    }
    os << "end\n";
}

// Returns next_l; fills prev if present in the file.
int read_summary_stream(std::istream& is, TableSummary& s, std::vector<Int>* prev) {
    std::string key;
    int next_l = -1;
    std::string cname;
    if (!(is >> key >> cname) || key != "case") throw std::runtime_error("summary: bad file");
    s.tag = case_from_name(cname);
    if (!(is >> key >> s.n_max) || key != "n_max") throw std::runtime_error("summary: bad file");
    if (!(is >> key >> next_l) || key != "next_l") throw std::runtime_error("summary: bad file");
    s.row_sum.assign(s.n_max, Int(0));
    s.row_sum_l.assign(s.n_max, Int(0));
    s.row_sum_l2.assign(s.n_max, Int(0));
    if (prev) prev->assign(s.n_max + 1, Int(0));
    // spots line
    std::string line;
    std::getline(is, line);  // rest of next_l line
    std::getline(is, line);
    {
        std::istringstream ls(line);
        ls >> key;
        if (key != "spots") throw std::runtime_error("summary: bad spots line");
        int n;
        while (ls >> n) s.rows[n].assign(n, Int(0));
    }
    bool have_prev = false;
    while (is >> key) {
        if (key == "end") break;
        if (key == "agg") {
            int n;
            std::string a, b, c;
            is >> n >> a >> b >> c;
            s.row_sum[n - 1] = Int(a);
            s.row_sum_l[n - 1] = Int(b);
            s.row_sum_l2[n - 1] = Int(c);
        } else if (key == "row") {
            int n, l;
            std::string v;
            is >> n >> l >> v;
            s.rows.at(n).at(l - 1) = Int(v);
        } else if (key == "prev") {
            int n;
            std::string v;
            is >> n >> v;
            if (prev) (*prev)[n] = Int(v);
            have_prev = true;
        } else {
            throw std::runtime_error("summary: unknown key " + key);
        }
    }
    if (prev && !have_prev && next_l > 1)
        throw std::runtime_error("summary: checkpoint missing prev column");
    return next_l;
}

void atomic_write(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + tmp);
        writer(f);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp);
}

}  // namespace

void save_table_summary(const TableSummary& s, const std::string& path) {
    atomic_write(path, [&](std::ostream& os) { write_summary_stream(os, s, s.n_max + 1, nullptr); });
}

TableSummary load_table_summary(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_table_summary: cannot open " + path);
    TableSummary s;
    int next_l = read_summary_stream(f, s, nullptr);
    if (next_l <= s.n_max) throw std::runtime_error("load_table_summary: file is an unfinished checkpoint");
    return s;
}

TableSummary build_table_summary(Case c, int n_max, std::vector<int> spot_rows,
                                 const std::string& checkpoint_path,
                                 const std::function<void(int)>& progress) {
    TableSummary s;
    std::vector<Int> prev(n_max + 1, Int(0));
    int start_l = 1;

    bool resumed = false;
    if (!checkpoint_path.empty()) {
        std::ifstream f(checkpoint_path, std::ios::binary);
        if (f) {
            TableSummary loaded;
            std::vector<Int> lp;
            int next_l = read_summary_stream(f, loaded, &lp);
            if (loaded.tag == c && loaded.n_max == n_max) {
                s = std::move(loaded);
                prev = std::move(lp);
                start_l = next_l;
                resumed = true;
            }
        }
    }
    if (!resumed) {
        s.tag = c;
        s.n_max = n_max;
        s.row_sum.assign(n_max, Int(0));
        s.row_sum_l.assign(n_max, Int(0));
        s.row_sum_l2.assign(n_max, Int(0));
        for (int n : spot_rows)
            if (n >= 1 && n <= n_max) s.rows[n].assign(n, Int(0));
        prev.assign(n_max + 1, Int(0));
        prev[0] = 1;
    }

    Int cnt;
    for (int l = start_l; l <= n_max; ++l) {
        std::vector<Int> cur = cumulative_counts_column(c, l, n_max);
        for (int n = std::max(1, l); n <= n_max; ++n) {
            cnt = cur[n] - prev[n];
            if (sgn(cnt) < 0)
                throw std::logic_error("build_table_summary: negative count (recursion bug)");
            if (sgn(cnt) == 0) continue;
            s.row_sum[n - 1] += cnt;
            Int lc = cnt * l;
            s.row_sum_l[n - 1] += lc;
            lc *= l;
            s.row_sum_l2[n - 1] += lc;
            auto it = s.rows.find(n);
            if (it != s.rows.end()) it->second[l - 1] = cnt;
        }
        prev = std::move(cur);
        if (progress) progress(l);
        if (!checkpoint_path.empty() && (l % 5 == 0 || l == n_max)) {
            atomic_write(checkpoint_path, [&](std::ostream& os) {
                write_summary_stream(os, s, l + 1, &prev);
            });
        }
    }

    // exact row-sum conservation for every n (the "full/nightly" check)
    for (int n = 1; n <= n_max; ++n)
        if (s.row_sum[n - 1] != s.case_total(n))
            throw std::logic_error("build_table_summary: row-sum conservation violated at n=" +
                                   std::to_string(n));
    return s;
}

}  // namespace limdist
