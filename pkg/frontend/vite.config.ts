import { defineConfig } from "vitest/config";

export default defineConfig({
  server: {
    // dev server forwards API calls to a locally running `aclbdd serve`
    proxy: { "/sessions": "http://127.0.0.1:8000" },
  },
  test: {
    environment: "jsdom",
  },
});
