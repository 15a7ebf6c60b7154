# run_all.py
import subprocess, sys, os

def run(mod, *args):
    print(f"\n$ python -m {mod} {' '.join(args)}")
    subprocess.run([sys.executable, "-m", mod, *args], check=True)

def run_script(path):
    print(f"\n$ python {path}")
    subprocess.run([sys.executable, path], check=True)

def main():
    os.makedirs("out", exist_ok=True)

    # Dados de todas as figuras (config/figures.yaml)
    run("interfaces.cli", "figures", "--out-dir", "out", "-v")

    # Validação contra os valores de referência
    run_script("run_validate.py")

    print("\n✅ Pipeline concluído. Veja out/*.json, out/*.csv e out/validation.json")

if __name__ == "__main__":
    main()
