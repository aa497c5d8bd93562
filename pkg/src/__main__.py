"""python -m src で CLI を実行"""

from src.cli.main import main

if __name__ == "__main__":
    main()
