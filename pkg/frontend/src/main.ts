import { ApiClient } from "./api.js";
import { renderApp } from "./render.js";
import { SessionController } from "./state.js";
import type { ProblemSpec } from "./types.js";

const GRADES = ["Very Bad", "Bad", "Medium", "Good", "Very Good"];

// starter problem shown in the table editor (the scholarship example)
const TEMPLATE: ProblemSpec = {
  n: 2,
  criteria: [
    { id: "Mat", scale: { kind: "qualitative", labels: GRADES } },
    { id: "Phy", scale: { kind: "qualitative", labels: GRADES } },
    { id: "Com", scale: { kind: "qualitative", labels: GRADES } },
  ],
  alternatives: {
    A: { Mat: "Medium", Phy: "Very Good", Com: "Very Good" },
    B: { Mat: ["Good", "Very Good"], Phy: ["Very Bad", "Medium"], Com: ["Bad", "Good"] },
    C: { Mat: ["Bad", "Very Good"], Phy: "Good", Com: ["Medium", "Good"] },
    D: { Mat: ["Good", "Very Good"], Phy: ["Medium", "Good"], Com: ["Medium", "Good"] },
    E: { Mat: "Very Good", Phy: ["Very Bad", "Good"], Com: ["Medium", "Good"] },
    F: { Mat: ["Very Bad", "Good"], Phy: ["Bad", "Medium"], Com: ["Bad", "Medium"] },
    H: { Mat: ["Medium", "Good"], Phy: ["Medium", "Good"], Com: ["Medium", "Good"] },
    I: { Mat: "Very Good", Phy: ["Medium", "Very Good"], Com: "Bad" },
    L: { Mat: ["Very Bad", "Bad"], Phy: ["Bad", "Medium"], Com: ["Very Bad", "Medium"] },
    M: { Mat: ["Very Bad", "Bad"], Phy: ["Good", "Very Good"], Com: "Very Good" },
  },
};

const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");

const api = new ApiClient("");
const controller: SessionController = new SessionController(api, (state) =>
  renderApp(root, controller, state, TEMPLATE),
);
renderApp(root, controller, controller.state, TEMPLATE);
