#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace bookem::detail {

// Dinic max-flow on a unit-scale network; capacities are long long.
class MaxFlow {
public:
    static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

    explicit MaxFlow(int n) : g_(n), level_(n), it_(n) {}

    void add_edge(int u, int v, long long cap) {
        g_[u].push_back({v, cap, static_cast<int>(g_[v].size())});
        g_[v].push_back({u, 0, static_cast<int>(g_[u].size()) - 1});
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(it_.begin(), it_.end(), 0);
            while (long long f = dfs(s, t, kInf)) flow += f;
        }
        return flow;
    }

    // Residual reachability from s after max_flow: the source side of one
    // minimum cut.
    std::vector<char> source_side(int s) const {
        std::vector<char> seen(g_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : g_[v])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        long long cap;
        int rev;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : g_[v])
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    q.push(a.to);
                }
        }
        return level_[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = it_[v]; i < static_cast<int>(g_[v].size()); ++i) {
            Arc& a = g_[v][i];
            if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
                long long d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    g_[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> g_;
    std::vector<int> level_;
    std::vector<int> it_;
};

}  // namespace bookem::detail
